// stieltjes-lab: command-line front end for the moment-problem pipeline.

#include "stieltjes/cli/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw stieltjes::cli::JobError("cannot open " + path, "--input");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  using namespace stieltjes::cli;

  CLI::App app{"Exact Hankel, continued-fraction and Pade analysis of moment sequences"};
  app.set_version_flag("--version", "stieltjes-lab 0.1.0");

  std::string command, input, moments, alpha, parity, kind, tau, points, format;
  std::size_t count = 10, N = 0, j = 0;
  bool emit = false, from_fraction = false, floats = false;

  app.add_option("command", command,
                 "analyze | fractions | polys | resolvent | pade | determinacy | probe | laguerre-demo | verify | "
                 "moments");
  app.add_option("--input", input, "JobSpec JSON file, or - for standard input");
  app.add_option("--moments", moments, "inline moments, comma separated (1,1/2,-3)");
  app.add_option("--alpha", alpha, "Laguerre parameter P/Q");
  auto* count_opt = app.add_option("--count", count, "number of Laguerre moments (default 10)");
  auto* n_opt = app.add_option("--N", N, "number of fraction steps");
  auto* j_opt = app.add_option("--j", j, "Pade index");
  app.add_option("--parity", parity, "even | odd");
  app.add_option("--kind", kind, "diagonal | subdiagonal");
  app.add_option("--tau", tau, "NUM_COEFFS/DEN_COEFFS, zero or infinity");
  app.add_option("--points", points, "sample points z1,z2,...");
  app.add_option("--format", format, "json | text | csv");
  app.add_flag("--emit", emit, "fractions: print the S-fraction as a reusable job");
  app.add_flag("--from-fraction", from_fraction, "moments: expand an s_fraction job");
  app.add_flag("--float", floats, "probe: add float renderings of the exact values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  JobSpec job;
  try {
    const int sources = static_cast<int>(!input.empty()) + static_cast<int>(!moments.empty()) +
                        static_cast<int>(!alpha.empty());
    if (sources > 1) throw JobError("give only one of --input, --moments, --alpha", "command line");
    if (!input.empty()) job = parse_job_json(slurp(input));
    if (!command.empty()) job.command = command;
    if (job.command.empty()) throw JobError("no command given", "command line");
    if (!moments.empty())
      job.input = InlineMoments{stieltjes::MomentSequence(parse_rational_list(moments, "--moments"))};
    if (!alpha.empty()) job.input = LaguerreInput{parse_rational_at(alpha, "--alpha"), count};
    else if (*count_opt) throw JobError("--count needs --alpha", "--count");

    JobOptions& o = job.options;
    if (*n_opt) o.N = N;
    if (*j_opt) o.j = j;
    if (!parity.empty()) o.parity = parity;
    if (!kind.empty()) o.kind = kind;
    if (!tau.empty()) o.tau = parse_tau(tau);
    if (!points.empty()) o.points = parse_rational_list(points, "--points");
    if (!format.empty()) o.format = parse_format(format);
    o.emit = o.emit || emit;
    o.from_fraction = o.from_fraction || from_fraction;
    o.floats = o.floats || floats;
  } catch (const JobError& e) {
    nlohmann::json err{{"error", {{"kind", "parse"}, {"message", e.what()}, {"position", e.position()}}}};
    std::cerr << err.dump() << "\n";
    return kParseError;
  }
  return run(job, std::cout, std::cerr);
}
