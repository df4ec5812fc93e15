#include "charvanish/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include <json.hpp>

#include "charvanish/chartable.hpp"
#include "report_detail.hpp"

namespace charvanish {

bool RunResult::all_pass() const {
  if (!errors.empty()) return false;
  for (const VerificationReport& r : reports) {
    if (!r.all_pass()) return false;
  }
  return true;
}

RunResult run_verification(const CorpusManifest& manifest,
                           const VerifyOptions& options, int jobs) {
  const std::size_t count = manifest.groups.size();
  std::vector<std::optional<VerificationReport>> reports(count);
  std::vector<std::optional<std::string>> errors(count);
  TableCache cache(options.max_order);

  // Workers pull manifest indices from a shared counter and write into their
  // own slots, so the merge below is in manifest order no matter how the
  // work was interleaved.
  std::atomic<std::size_t> next{0};
  const auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      const GroupSpec& spec = manifest.groups[i];
      try {
        const PermutationGroup g =
            realize(spec, manifest.max_order, manifest.max_degree);
        reports[i] = verify_group(spec.name, g, options, cache);
      } catch (const std::exception& e) {
        errors[i] = spec.name + ": " + e.what();
      }
    }
  };

  const std::size_t workers =
      std::min<std::size_t>(std::max(jobs, 1), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  RunResult result;
  for (std::size_t i = 0; i < count; ++i) {
    if (reports[i]) result.reports.push_back(std::move(*reports[i]));
    if (errors[i]) result.errors.push_back(std::move(*errors[i]));
  }

  // With an output directory set, each verified group gets its report as a
  // standalone JSON file.
  if (!manifest.out_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(manifest.out_dir, ec);
    if (ec) {
      result.errors.push_back(manifest.out_dir +
                              ": cannot create output directory");
    } else {
      for (const VerificationReport& r : result.reports) {
        const std::filesystem::path path =
            std::filesystem::path(manifest.out_dir) / (r.group + ".verify.json");
        std::ofstream out(path, std::ios::binary);
        out << report_json(r);
        if (!out.good()) {
          result.errors.push_back(r.group + ": cannot write " + path.string());
        }
      }
    }
  }
  return result;
}

std::string run_json(const RunResult& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["all_pass"] = r.all_pass();
  j["reports"] = nlohmann::ordered_json::array();
  for (const VerificationReport& report : r.reports) {
    j["reports"].push_back(detail::report_to_json(report));
  }
  j["errors"] = r.errors;
  return j.dump(2) + "\n";
}

std::string run_text(const RunResult& r) {
  std::ostringstream out;
  std::size_t pass = 0;
  std::size_t fail = 0;
  for (const VerificationReport& report : r.reports) {
    const bool ok = report.all_pass();
    ++(ok ? pass : fail);
    out << report.group << " | order " << report.order.get_str() << " | "
        << (ok ? "PASS" : "FAIL") << "\n";
  }
  for (const std::string& e : r.errors) out << "error " << e << "\n";
  out << "total " << (r.reports.size() + r.errors.size()) << " | pass " << pass
      << " | fail " << fail << " | errors " << r.errors.size() << "\n";
  out << "verdict " << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace charvanish
