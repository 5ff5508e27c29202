// locc: command-line front end for the locally-accessible-information toolkit.
//
// Exit codes: 0 success, 1 validation error, 2 numerical error, 3 I/O error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "locc/bounds.hpp"
#include "locc/ensemble_io.hpp"
#include "locc/protocol.hpp"
#include "locc/report.hpp"
#include "locc/repro.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 1, kNumerical = 2, kIo = 3 };

struct Options {
  std::string report = "text";
  std::string ensemble_path;
  std::string protocol_path;
  std::string state_path;
  std::string encodings_path;
  std::string example;
  std::string out_path;
  std::vector<int> receivers;
  int grid = 0;
  int max_depth = locc::kDefaultMaxProtocolDepth;
  double tol = 1e-6;
};

bool json_output(const Options& o) { return o.report == "json"; }

std::string cmd_bound(const Options& o) {
  const locc::Ensemble e = locc::load_ensemble(o.ensemble_path);
  const locc::BoundReport r = locc::locc_bound(e);
  return json_output(o) ? locc::to_json(r).dump(2) + "\n" : locc::to_text(r);
}

std::string cmd_info(const Options& o) {
  const locc::Ensemble e = locc::load_ensemble(o.ensemble_path);
  const locc::BoundReport r = locc::locc_bound(e);
  if (json_output(o)) {
    locc::Json j{{"dims", e.layout().dims()},
                 {"members", e.size()},
                 {"all_pure", e.all_pure()},
                 {"average_state_entropy_bits",
                  locc::round_sig12(locc::von_neumann_entropy(locc::average_state(e)))},
                 {"bound", locc::to_json(r)}};
    if (e.all_pure()) j["complementarity"] = locc::to_json(locc::complementarity_check(e));
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "parties: " << e.layout().parties() << " (dims";
  for (int d : e.layout().dims()) out << ' ' << d;
  out << ")\nmembers: " << e.size() << (e.all_pure() ? " (all pure)" : "") << '\n'
      << "S(average state): "
      << locc::format_sig12(locc::von_neumann_entropy(locc::average_state(e))) << " bits\n"
      << locc::to_text(r);
  if (e.all_pure()) out << locc::to_text(locc::complementarity_check(e));
  return out.str();
}

std::string cmd_sweep(const Options& o) {
  const locc::SweepExample which = locc::parse_sweep_example(o.example);
  const int grid = o.grid > 0 ? o.grid : (which == locc::SweepExample::E1 ? 101 : 1001);
  const auto rows = locc::sweep(which, grid);
  std::ostringstream csv;
  locc::write_sweep_csv(csv, which, rows);
  if (o.out_path.empty()) return csv.str();
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) throw locc::IoError("cannot write " + o.out_path);
  file << csv.str();
  if (!file) throw locc::IoError("write failed for " + o.out_path);
  return "wrote " + std::to_string(rows.size()) + " rows to " + o.out_path + "\n";
}

std::string cmd_crossings(const Options& o) {
  const locc::Crossings c = locc::find_e2_crossings(o.tol);
  return json_output(o) ? locc::to_json(c).dump(2) + "\n" : locc::to_text(c);
}

std::string cmd_simulate(const Options& o) {
  const locc::Ensemble e = locc::load_ensemble(o.ensemble_path);
  const locc::ProtocolTree tree = locc::load_protocol(o.protocol_path);
  const locc::ProtocolResult result = locc::run_protocol(e, tree, o.max_depth);
  const locc::BoundReport bound = locc::locc_bound(e);
  if (json_output(o)) {
    locc::Json j = locc::to_json(result);
    j["bound_bits"] = locc::round_sig12(bound.bound_bits);
    return j.dump(2) + "\n";
  }
  return locc::to_text(result) + "locally accessible information bound: " +
         locc::format_sig12(bound.bound_bits) + " bits\n";
}

std::string cmd_densecode(const Options& o) {
  const locc::QuantumState base = locc::load_state(o.state_path);
  const locc::EncodingSet set = locc::encodings_from_json(locc::read_json_file(o.encodings_path));
  const locc::Ensemble post = locc::build_encoding_ensemble(base, set.encodings, set.senders);

  const locc::SystemLayout& layout = base.layout();
  const std::vector<int> senders =
      set.senders.empty()
          ? locc::leading_parties_of_dim(layout, set.encodings.front().unitary.rows())
          : layout.normalize(set.senders);
  std::vector<int> receivers = o.receivers;
  if (receivers.empty())
    for (int p = 1; p <= layout.parties(); ++p)
      if (std::find(senders.begin(), senders.end(), p) == senders.end()) receivers.push_back(p);
  std::vector<int> sender_dims;
  for (int p : senders) sender_dims.push_back(layout.dim(p));

  const double bound = locc::dense_coding_bound(post, sender_dims, receivers);
  if (json_output(o)) {
    return locc::Json{{"senders", senders},
                      {"receivers", receivers},
                      {"capacity_bound_bits", locc::round_sig12(bound)}}
               .dump(2) + "\n";
  }
  std::ostringstream out;
  out << "senders:";
  for (int p : senders) out << ' ' << p;
  out << "\nreceivers:";
  for (int p : receivers) out << ' ' << p;
  out << "\ndense coding capacity bound: " << locc::format_sig12(bound) << " bits\n";
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper bounds on locally accessible information for multipartite ensembles"};
  app.require_subcommand(1);
  Options o;

  auto add_report = [&o](CLI::App* sub) {
    sub->add_option("--report", o.report, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* bound = app.add_subcommand("bound", "Locally accessible information bound and verdict");
  bound->add_option("ensemble", o.ensemble_path, "Ensemble file")->required();
  add_report(bound);

  auto* info = app.add_subcommand("info", "Entropies, bound and complementarity check");
  info->add_option("ensemble", o.ensemble_path, "Ensemble file")->required();
  add_report(info);

  auto* sweep = app.add_subcommand("sweep", "Parameter sweep of a reference ensemble as CSV");
  sweep->add_option("example", o.example, "e1 or e2")->required();
  sweep->add_option("--grid", o.grid, "Points per axis (default 101 for e1, 1001 for e2)");
  sweep->add_option("--out", o.out_path, "CSV output path (stdout if omitted)");

  auto* crossings = app.add_subcommand("crossings", "Thresholds where the E2 bound crosses its Holevo information");
  crossings->add_option("--tol", o.tol, "Bisection tolerance")->capture_default_str();
  add_report(crossings);

  auto* simulate = app.add_subcommand("simulate", "Run an LOCC protocol tree on an ensemble");
  simulate->add_option("ensemble", o.ensemble_path, "Ensemble file")->required();
  simulate->add_option("protocol", o.protocol_path, "Protocol file")->required();
  simulate->add_option("--max-depth", o.max_depth, "Depth limit")->capture_default_str();
  add_report(simulate);

  auto* densecode = app.add_subcommand("densecode", "Distributed dense-coding capacity bound");
  densecode->add_option("state", o.state_path, "Shared state file")->required();
  densecode->add_option("encodings", o.encodings_path, "Encoding unitaries file")->required();
  densecode->add_option("--receivers", o.receivers, "Receiver parties (default: all non-senders)")
      ->delimiter(',');
  add_report(densecode);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  try {
    std::string output;
    if (*bound) output = cmd_bound(o);
    else if (*info) output = cmd_info(o);
    else if (*sweep) output = cmd_sweep(o);
    else if (*crossings) output = cmd_crossings(o);
    else if (*simulate) output = cmd_simulate(o);
    else if (*densecode) output = cmd_densecode(o);
    std::cout << output;
    return kOk;
  } catch (const locc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const locc::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const locc::NumericalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNumerical;
  }
}
