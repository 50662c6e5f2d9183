#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bngap/bn_rep.hpp"
#include "bngap/partition.hpp"
#include "bngap/spectral.hpp"
#include "bngap/verification.hpp"
#include "bngap/weight_file.hpp"
#include "bngap/witness.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt_psi(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Accepts "[3,1]|[2]" and the short forms "vni:n:i" and "pn".
bngap::Bipartition parse_label(const std::string& text, int n) {
  if (text.rfind("vni:", 0) == 0) {
    const auto second_colon = text.find(':', 4);
    if (second_colon == std::string::npos)
      throw std::invalid_argument("expected vni:<n>:<i>");
    const int ln = std::stoi(text.substr(4, second_colon - 4));
    const int i = std::stoi(text.substr(second_colon + 1));
    if (ln != n) throw std::invalid_argument("size mismatch");
    if (i < 1 || i > n)
      throw std::invalid_argument("subset size out of range");
    return bngap::Bipartition{
        i == n ? bngap::Partition() : bngap::Partition({n - i}),
        bngap::Partition({i})};
  }
  bngap::Bipartition label = bngap::parse_bipartition(text);
  if (label.n() != n) throw std::invalid_argument("size mismatch");
  return label;
}

void print_scan(const bngap::GapScan& scan) {
  for (const bngap::LabelledGap& row : scan.table)
    std::cout << bngap::format_bipartition(row.label) << "\t"
              << fmt_psi(row.value.psi) << "\n";
  std::cout << "RESULT psi=" << fmt_psi(scan.psi)
            << " argmin=" << bngap::format_bipartition(scan.argmin) << "\n";
}

int run_gap(const std::string& weights_path, const std::string& irrep,
            bool family, bool all, bool pn, bool oracle, int jobs) {
  const bngap::WeightFile wf = bngap::parse_weight_file(read_file(weights_path));
  const bngap::GroupRingElement w = bngap::to_element(wf);
  if (all) {
    print_scan(bngap::psi_global(w, jobs));
  } else if (pn) {
    print_scan(bngap::psi_pn(w));
  } else if (oracle) {
    const bngap::GapValue value = bngap::cayley_oracle_psi(w);
    std::cout << "regular\t" << fmt_psi(value.psi) << "\n";
    std::cout << "RESULT psi=" << fmt_psi(value.psi) << " argmin=regular\n";
  } else if (!irrep.empty()) {
    const bngap::Bipartition label = parse_label(irrep, wf.n);
    const bngap::GapValue value = bngap::psi_irrep(w, label);
    std::cout << bngap::format_bipartition(label) << "\t"
              << fmt_psi(value.psi) << "\n";
    std::cout << "RESULT psi=" << fmt_psi(value.psi)
              << " argmin=" << bngap::format_bipartition(label) << "\n";
  } else {
    (void)family;  // the default mode
    print_scan(bngap::psi_family(w, jobs));
  }
  return kExitPass;
}

int run_witness(int n, int k, bool std_witness, const std::string& emit) {
  const bngap::WitnessSpec spec =
      std_witness ? bngap::witness_std(n) : bngap::witness_vnk(n, k);
  const std::vector<std::string> comments = {
      spec.note, "target " + bngap::format_bipartition(spec.target)};
  const std::string text =
      bngap::format_weight_file(bngap::to_weight_file(spec), comments);
  if (emit.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(emit, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open " + emit);
    out << text;
  }
  return kExitPass;
}

int finish_report(const bngap::VerificationReport& report) {
  report.write_machine(std::cout);
  report.write_text(std::cerr);
  return report.all_pass() ? kExitPass : kExitCheckFailed;
}

int run_irrep_info(int n, const std::string& label_text) {
  std::vector<bngap::Bipartition> labels;
  if (label_text.empty()) {
    labels = bngap::enumerate_bipartitions(n);
  } else if (label_text == "pn") {
    labels = bngap::pn_components(n);
  } else {
    labels.push_back(parse_label(label_text, n));
  }
  const bool mults = n <= 6;
  std::cout << "label\tdim\tfamily\ttrivial" << (mults ? "\tmult_sn\tmult_nn" : "")
            << "\n";
  for (const bngap::Bipartition& label : labels) {
    std::cout << bngap::format_bipartition(label) << "\t"
              << bngap::bipartition_dimension(label) << "\t"
              << (bngap::in_gap_family(label) ? "yes" : "no") << "\t"
              << (bngap::is_trivial(label) ? "yes" : "no");
    if (mults) {
      std::cout << "\t"
                << bngap::trivial_multiplicity_on_subgroup(
                       label, bngap::Subgroup::symmetric)
                << "\t"
                << bngap::trivial_multiplicity_on_subgroup(
                       label, bngap::Subgroup::diagonal);
    }
    std::cout << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral gaps of weighted flip-and-transposition Laplacians "
               "on signed permutations"};
  app.require_subcommand(1);

  // gap
  std::string gap_weights, gap_irrep;
  bool gap_family = false, gap_all = false, gap_pn = false, gap_oracle = false;
  int gap_jobs = 1;
  CLI::App* gap = app.add_subcommand("gap", "psi of a weight file");
  gap->add_option("--weights", gap_weights, "weight file")->required();
  CLI::Option* opt_irrep = gap->add_option("--irrep", gap_irrep,
                                           "single label ([3,1]|[2], vni:n:i)");
  CLI::Option* opt_family =
      gap->add_flag("--family", gap_family, "scan the gap family (default)");
  CLI::Option* opt_all = gap->add_flag("--all", gap_all, "scan every label");
  CLI::Option* opt_pn = gap->add_flag("--pn", gap_pn, "scan the pn pair");
  CLI::Option* opt_oracle =
      gap->add_flag("--oracle", gap_oracle, "regular-module reference value");
  opt_irrep->excludes(opt_family)->excludes(opt_all)->excludes(opt_pn)
      ->excludes(opt_oracle);
  opt_family->excludes(opt_all)->excludes(opt_pn)->excludes(opt_oracle);
  opt_all->excludes(opt_pn)->excludes(opt_oracle);
  opt_pn->excludes(opt_oracle);
  gap->add_option("--jobs", gap_jobs, "parallel label evaluation")
      ->check(CLI::Range(1, 256));

  // witness
  int wit_n = 0, wit_k = 0;
  bool wit_std = false;
  std::string wit_emit;
  CLI::App* wit = app.add_subcommand("witness", "emit a separation witness");
  wit->add_option("--n", wit_n, "points")->required();
  CLI::Option* opt_k = wit->add_option("--k", wit_k, "subset label size");
  CLI::Option* opt_std =
      wit->add_flag("--std", wit_std, "witness for [n-1,1]|[]");
  opt_k->excludes(opt_std);
  wit->add_option("--emit", wit_emit, "output file (default stdout)");

  // verify
  int ver_n = 0, ver_trials = 0, ver_jobs = 1;
  std::uint64_t ver_seed = 0;
  bool ver_odd = false;
  double ver_sparse = 0.0;
  CLI::App* ver = app.add_subcommand(
      "verify", "randomized trials of the family reduction");
  ver->add_option("--n", ver_n, "points")->required();
  ver->add_option("--seed", ver_seed, "64-bit seed")->required();
  ver->add_option("--trials", ver_trials, "trial count")->required();
  ver->add_flag("--odd-only", ver_odd, "flip weights only on odd sets");
  ver->add_option("--sparse", ver_sparse, "drop probability per weight")
      ->check(CLI::Range(0.0, 1.0));
  ver->add_option("--jobs", ver_jobs, "parallel label evaluation")
      ->check(CLI::Range(1, 256));

  // cesi
  int cesi_n = 0, cesi_k = 0, cesi_jobs = 1;
  CLI::App* cesi = app.add_subcommand(
      "cesi", "exhibit weights whose gap escapes the pn pair");
  cesi->add_option("--n", cesi_n, "points")->required();
  cesi->add_option("--k", cesi_k, "target subset size")->required();
  cesi->add_option("--jobs", cesi_jobs, "parallel label evaluation")
      ->check(CLI::Range(1, 256));

  // irrep-info
  int info_n = 0;
  std::string info_label;
  CLI::App* info = app.add_subcommand("irrep-info", "label catalogue facts");
  info->add_option("--n", info_n, "points")->required();
  info->add_option("--label", info_label, "single label (or pn)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gap->parsed())
      return run_gap(gap_weights, gap_irrep, gap_family, gap_all, gap_pn,
                     gap_oracle, gap_jobs);
    if (wit->parsed()) {
      if (!wit_std && opt_k->count() == 0)
        throw std::invalid_argument("witness needs --k or --std");
      return run_witness(wit_n, wit_k, wit_std, wit_emit);
    }
    if (ver->parsed()) {
      bngap::TrialOptions options;
      options.odd_only = ver_odd;
      options.sparse_p = ver_sparse;
      options.jobs = ver_jobs;
      return finish_report(
          bngap::randomized_reduction_trial(ver_n, ver_seed, ver_trials, options));
    }
    if (cesi->parsed())
      return finish_report(bngap::cesi_counterexample(cesi_n, cesi_k, cesi_jobs));
    if (info->parsed()) return run_irrep_info(info_n, info_label);
  } catch (const bngap::WeightParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
