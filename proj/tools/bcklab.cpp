// bcklab: enumerate, analyze and verify finite BCK-algebras.
//
// Exit codes: 0 success, 1 I/O or validation failure, 2 usage or size
// guard, 3 semantic failure (counterexample, violation, missing embedding).

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bck/algebra.hpp"
#include "bck/enumeration.hpp"
#include "bck/lab.hpp"
#include "bck/report.hpp"
#include "bck/structure.hpp"
#include "bck/terms.hpp"

namespace {

using bck::Json;

enum Exit { success = 0, failure = 1, usage = 2, semantic = 3 };

class RunReport {
 public:
  RunReport(std::string command, Json parameters)
      : start_(std::chrono::steady_clock::now()) {
    Json header;
    header["record"] = "run";
    header["command"] = std::move(command);
    header["parameters"] = std::move(parameters);
    std::cout << header.dump() << '\n';
  }

  void add(const bck::ReportRecord& record) {
    std::cout << bck::to_json_line(record) << '\n';
    ++counts_[std::string(bck::to_string(record.status))];
  }

  void finish() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    Json summary;
    summary["record"] = "summary";
    summary["counts"] = counts_;
    summary["wall_time_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    std::cout << summary.dump() << '\n';
  }

  std::size_t count(bck::Status s) const {
    auto it = counts_.find(std::string(bck::to_string(s)));
    return it == counts_.end() ? 0 : it->second;
  }

 private:
  std::chrono::steady_clock::time_point start_;
  std::map<std::string, std::size_t> counts_{
      {"ok", 0}, {"vacuous", 0}, {"violation", 0}};
};

bck::Algebra load(const std::string& source) {
  if (bck::is_builtin_name(source)) return bck::builtin(source);
  return bck::load_algebra_file(source);
}

bck::EnumerateOptions enumerate_options(std::size_t jobs, bool unsafe,
                                        std::size_t n) {
  bck::EnumerateOptions options;
  options.jobs = jobs;
  if (unsafe) options.max_size = bck::unsafe_enumeration_guard;
  if (n > bck::default_enumeration_guard && n <= options.max_size)
    std::cerr << "warning: enumerating size " << n
              << " is slow and memory hungry\n";
  return options;
}

int cmd_enumerate(std::size_t n, const std::string& out, bool count_only,
                  std::size_t jobs, bool unsafe) {
  const auto options = enumerate_options(jobs, unsafe, n);
  const auto algebras = bck::enumerate(n, options);
  if (count_only) {
    std::cout << algebras.size() << '\n';
    return success;
  }
  const auto records = bck::make_records(algebras, jobs);
  if (out.empty()) {
    bck::write_catalog(std::cout, records);
  } else {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot open " + out);
    bck::write_catalog(file, records);
    if (!file) throw std::ios_base::failure("write to " + out + " failed");
  }
  std::cerr << records.size() << " algebra(s) of size " << n << '\n';
  return success;
}

int cmd_analyze(const std::string& source) {
  const auto algebra = load(source);
  const auto id = bck::report_id(algebra);
  RunReport report("analyze", Json{{"algebra", source}});

  const auto order = bck::order(algebra);
  Json hasse = Json::array();
  for (auto [a, b] : order.hasse_pairs()) hasse.push_back(Json::array({a, b}));
  report.add({id, "order", bck::Status::ok,
              Json{{"is_chain", order.is_chain()}, {"hasse", hasse}}});

  Json ideals = Json::array();
  for (const auto& i : bck::all_ideals(algebra)) ideals.push_back(bck::to_json(i));
  report.add({id, "ideals", bck::Status::ok, ideals});

  const auto kind = bck::classify(algebra);
  Json cls{{"classification", std::string(bck::to_string(kind.kind))}};
  if (kind.monolith) cls["monolith"] = bck::to_json(*kind.monolith);
  report.add({id, "classification", bck::Status::ok, cls});

  report.add({id, "atoms", bck::Status::ok, Json(bck::lab::atoms(algebra))});

  Json embedded = Json::array();
  for (auto name : {"C2", "L3", "H3"})
    if (bck::embeds(algebra, bck::builtin(name))) embedded.push_back(name);
  report.add({id, "embeddings", bck::Status::ok, Json{{"patterns", embedded}}});

  if (algebra.size() <= bck::default_congruence_guard)
    report.add(bck::theta_report(
        algebra, bck::verify_theta_maximality(algebra)));
  report.finish();

  std::cerr << "size " << algebra.size() << ", "
            << bck::to_string(kind.kind) << ", embeds " << embedded.dump()
            << '\n';
  return report.count(bck::Status::violation) ? semantic : success;
}

int cmd_check(const std::string& text, const std::string& source,
              std::size_t all_size, std::size_t jobs, bool unsafe) {
  const auto sentence = bck::parse_sentence(text);
  std::vector<bck::Algebra> algebras;
  Json parameters{{"sentence", bck::to_string(sentence)}};
  if (!source.empty()) {
    algebras.push_back(load(source));
    parameters["algebra"] = source;
  } else {
    algebras = bck::enumerate(all_size,
                              enumerate_options(jobs, unsafe, all_size));
    parameters["all_size"] = all_size;
  }
  std::vector<std::optional<bck::Assignment>> verdicts(algebras.size());
  bck::parallel_for(algebras.size(), jobs, [&](std::size_t i) {
    verdicts[i] = bck::find_counterexample(sentence, algebras[i]);
  });

  RunReport report("check", parameters);
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    bck::ReportRecord r{bck::report_id(algebras[i]), "holds",
                        bck::Status::ok, Json::object()};
    if (verdicts[i]) {
      r.status = bck::Status::violation;
      Json env = Json::object();
      for (const auto& [name, value] : *verdicts[i]) env[name] = value;
      r.witness["counterexample"] = env;
    }
    report.add(r);
  }
  report.finish();
  const auto failed = report.count(bck::Status::violation);
  std::cerr << algebras.size() - failed << " of " << algebras.size()
            << " algebra(s) satisfy " << bck::to_string(sentence) << '\n';
  return failed ? semantic : success;
}

int cmd_verify(std::size_t size, const std::string& catalog, std::size_t jobs,
               bool unsafe) {
  std::vector<bck::Algebra> algebras;
  Json parameters;
  if (!catalog.empty()) {
    for (const auto& r : bck::read_catalog(catalog))
      algebras.push_back(r.algebra());
    parameters["catalog"] = catalog;
  } else {
    algebras = bck::enumerate(size, enumerate_options(jobs, unsafe, size));
    parameters["size"] = size;
  }
  RunReport report("verify-lemmas", parameters);
  for (const auto& r : bck::lab::verify_lemmas(algebras, jobs)) report.add(r);
  report.finish();
  const auto violations = report.count(bck::Status::violation);
  std::cerr << algebras.size() << " algebra(s), " << violations
            << " violation(s)" << (algebras.empty() ? " (vacuous)" : "") << '\n';
  return violations ? semantic : success;
}

int cmd_embed(const std::string& target, const std::string& source,
              bool require) {
  const auto pattern = bck::builtin(target);
  const auto algebra = load(source);
  const auto found = bck::find_embeddings(algebra, pattern);
  RunReport report("embed", Json{{"target", target}, {"algebra", source}});
  const auto id = bck::report_id(algebra);
  for (const auto& map : found)
    report.add({id, "embedding", bck::Status::ok, Json{{"map", map}}});
  report.finish();
  std::cerr << found.size() << " embedding(s) of " << target << '\n';
  return found.empty() && require ? semantic : success;
}

int cmd_free(const std::string& source, std::size_t rank) {
  const auto free = bck::lab::free_algebra_probe(load(source), rank);
  std::cout << bck::to_text(free.algebra);
  std::cerr << "free algebra on " << rank << " generator(s): "
            << free.algebra.size() << " element(s)\n";
  return success;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite BCK-algebra workbench"};
  app.require_subcommand(1);
  std::size_t jobs = 1;
  bool unsafe = false;
  app.add_option("--jobs", jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_flag("--unsafe-size", unsafe, "Allow enumeration up to size 7");

  std::size_t size = 0;
  std::string out, source, text, catalog, target;
  bool count_only = false, require = false;
  std::size_t rank = 0;

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate algebras up to isomorphism");
  enumerate->add_option("--size", size)->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--out", out, "Catalog file (JSONL)");
  enumerate->add_flag("--count-only", count_only);

  auto* analyze = app.add_subcommand("analyze", "Order, ideals and classification");
  analyze->add_option("algebra", source, "File or built-in name")->required();

  auto* check = app.add_subcommand("check", "Check a sentence");
  check->add_option("sentence", text)->required();
  auto* check_source = check->add_option_group("source");
  check_source->add_option("--algebra", source, "File or built-in name");
  check_source->add_option("--all-size", size, "Every algebra of this size")
      ->check(CLI::PositiveNumber);
  check_source->require_option(1);

  auto* verify = app.add_subcommand("verify-lemmas", "Verify the lemma checks");
  auto* verify_source = verify->add_option_group("source");
  verify_source->add_option("--size", size)->check(CLI::PositiveNumber);
  verify_source->add_option("--catalog", catalog, "Catalog file (JSONL)");
  verify_source->require_option(1);

  auto* embed = app.add_subcommand("embed", "List embeddings of C2, L3 or H3");
  embed->add_option("--target", target)
      ->required()
      ->check(CLI::IsMember({"C2", "L3", "H3"}));
  embed->add_option("algebra", source)->required();
  embed->add_flag("--require", require, "Exit 3 when there is none");

  auto* free = app.add_subcommand("free", "Free algebra in the variety of a generator");
  free->add_option("--generator", source)->required();
  free->add_option("--rank", rank)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? success : usage;
  }

  try {
    if (*enumerate) return cmd_enumerate(size, out, count_only, jobs, unsafe);
    if (*analyze) return cmd_analyze(source);
    if (*check) return cmd_check(text, source, size, jobs, unsafe);
    if (*verify) return cmd_verify(size, catalog, jobs, unsafe);
    if (*embed) return cmd_embed(target, source, require);
    if (*free) return cmd_free(source, rank);
  } catch (const bck::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const bck::SizeGuardExceeded& e) {
    std::cerr << "error: " << e.what() << " (see --unsafe-size)\n";
    return usage;
  } catch (const bck::lab::GuardExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return failure;
  }
  return usage;
}
