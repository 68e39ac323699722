// Serial reference path vs OpenMP kernels: wall time per workload and a check
// that both paths render identical output.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <string>
#include <thread>

#include "matdec/catalog.hpp"
#include "matdec/connectivity.hpp"
#include "matdec/decomposer.hpp"
#include "matdec/reproduce.hpp"

using namespace matdec;

namespace {

double seconds(const std::function<std::string()>& run, std::string& out, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) out = run();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

std::string certify_text(const std::string& key, const MinorClass& cls, bool cross, const Execution& exec) {
  const CatalogEntry& e = catalog_entry(key);
  DecompositionProblem p{e.matroid, *e.side, 3, cls, {}};
  p.options.cross_validate = cross;
  return render_report(certify(p, exec).second, ReportFormat::Json);
}

std::string connectivity_text(const Execution& exec) {
  std::string s;
  for (const char* key : {"R12", "Q13_sec5", "P13", "AG32"}) {
    const BinaryMatroid& m = builtin(key);
    s += key;
    s += is_n_connected(m, 3, exec) ? " 3c" : " -";
    if (is_n_connected(m, 3, exec)) s += is_internally_4_connected(m, exec) ? " i4c\n" : " -\n";
    else s += "\n";
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  const int jobs = argc > 1 ? std::stoi(argv[1]) : static_cast<int>(std::max(2u, std::thread::hardware_concurrency()));
  const int reps = argc > 2 ? std::stoi(argv[2]) : 3;
  const Execution serial = Execution::serial(), par = Execution::parallel(jobs);

  struct Workload {
    const char* name;
    std::function<std::string(const Execution&)> run;
  };
  const Workload workloads[] = {
      {"certify R12 (regular)", [](const Execution& x) { return certify_text("R12", regular_class(), false, x); }},
      {"certify R12 + cross-validation", [](const Execution& x) { return certify_text("R12", regular_class(), true, x); }},
      {"certify X (all binary)", [](const Execution& x) { return certify_text("X", all_binary_class(), true, x); }},
      {"connectivity scans", connectivity_text},
      {"R12 tables", [](const Execution& x) { return reproduce_r12(x); }},
  };

  std::printf("%-34s %10s %10s %8s  %s\n", "workload", "serial s", "parallel s", "speedup", "output");
  int bad = 0;
  for (const auto& w : workloads) {
    std::string a, b;
    const double ts = seconds([&] { return w.run(serial); }, a, reps);
    const double tp = seconds([&] { return w.run(par); }, b, reps);
    const bool same = a == b;
    bad += !same;
    std::printf("%-34s %10.4f %10.4f %8.2f  %s\n", w.name, ts, tp, ts / tp, same ? "identical" : "DIFFERS");
  }
  std::printf("jobs = %d, reps = %d\n", jobs, reps);
  return bad ? 1 : 0;
}
