#pragma once

// Command-line front end. run() is callable in-process so tests can drive it.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jwrep/jwrep.hpp"

namespace jwrep::cli {

using io::json;

enum Exit : int { kOk = 0, kDomain = 1, kCheckFailed = 2, kResource = 3, kUsage = 64 };

namespace detail {

struct Options {
  int n = 0;
  int k = 2;
  int r = 0;
  int chirality = 1;
  std::string diagram;
  std::string word;
  std::string suite = "relations";
  std::string filter = "all";
  std::string format = "json";
  std::string output;
  std::size_t length = 300;
  std::size_t count = 20000;
  std::optional<std::uint64_t> seed;
  std::size_t targets = 32;
  std::size_t target_index = 0;
  int maxlen = 10;
  unsigned threads = 1;
  bool oracle = false;
  int genus = 0, m = 0, n2 = 0;
  int bound = 10000;
  double tol = 1e-3;
};

inline json tolerances_relations() {
  return {{"relations", 1e-10}, {"far_commute", 1e-12}, {"generator_formula", 1e-12}};
}

inline std::vector<Partition> selected_diagrams(const Options& o, const HeckeParams& p) {
  if (!o.diagram.empty())
    return {Partition::parse(o.diagram)};
  if (o.n < 1)
    throw DomainError("give --n or --diagram");
  return enumerate_diagrams(o.n, p);
}

inline json sector_check(const Options& o, bool& ok) {
  HeckeParams p(o.k, o.r, o.chirality);
  json rows = json::array();
  json tol;
  ok = true;
  for (const auto& lam : selected_diagrams(o, p)) {
    json row = {{"diagram", lam.to_string()}};
    bool pass = true;
    if (o.suite == "relations") {
      Sector s = build_sector(lam, p);
      RelationReport rep = relation_report(s);
      pass = rep.pass();
      row["dim"] = s.dim();
      row["defects"] = io::relations_json(rep);
      tol = tolerances_relations();
    } else if (o.suite == "spectrum") {
      Sector s = build_sector(lam, p);
      SpectrumReport rep = spectrum_report(s);
      // A one-dimensional sector can only show one of the two eigenvalues.
      pass = rep.defect <= 1e-8 && (s.dim() < 2 || rep.both_present);
      row["dim"] = s.dim();
      row["defect"] = rep.defect;
      row["both_present"] = rep.both_present;
      tol = {{"spectrum", 1e-8}, {"presence", 1e-6}};
    } else {
      const double defect = verify_duality(lam, p);
      RConjugate conj = r_conjugate(lam, p);
      row["conjugate"] = conj.diagram.to_string();
      row["defect"] = defect;
      pass = defect <= 1e-10;
      if (conj.symmetric) {
        PairingType pt = pairing_type(lam, p);
        std::optional<int> sign = duality_symmetry_sign(lam, p);
        row["pairing"] = to_string(pt);
        row["symmetry_sign"] = sign ? json(*sign) : json(nullptr);
        const int expected = pt == PairingType::Symplectic ? -1 : 1;
        pass = pass && sign && *sign == expected;
      }
      tol = {{"duality", 1e-10}, {"symmetry", 1e-10}};
    }
    row["pass"] = pass;
    ok = ok && pass;
    rows.push_back(std::move(row));
  }
  return {{"suite", o.suite}, {"tolerances", tol}, {"sectors", std::move(rows)}, {"pass", ok}};
}

inline void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f)
    throw DomainError("cannot open output file " + o.output);
  f << text;
}

inline std::string csv_header(const json& config) { return "# config " + config.dump() + "\n"; }

} // namespace detail

/// argv-style entry point (args excludes the program name). Returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Jones-Wenzl braid representations at roots of unity", "jwrep"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto add_theory = [&](CLI::App* c, bool need_r = true) {
    c->add_option("--k", o.k, "Row bound k")->capture_default_str();
    auto* r = c->add_option("--r", o.r, "Root order r");
    if (need_r)
      r->required();
    c->add_option("--chirality", o.chirality, "+1 or -1")->capture_default_str();
  };
  auto add_output = [&](CLI::App* c) {
    c->add_option("--output", o.output, "Write output to this file");
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    c->add_option("--threads", o.threads, "Worker cap (0 = hardware)")->capture_default_str();
  };

  auto* sector = app.add_subcommand("sector", "Sector construction and checks");
  sector->require_subcommand(1);
  auto* sector_build = sector->add_subcommand("build", "Export a sector as JSON");
  add_theory(sector_build);
  add_output(sector_build);
  sector_build->add_option("--diagram", o.diagram, "Diagram like [2,1]")->required();
  auto* sector_check = sector->add_subcommand("check", "Run a check suite over sectors");
  add_theory(sector_check);
  add_output(sector_check);
  sector_check->add_option("--suite", o.suite)->check(CLI::IsMember({"relations", "spectrum", "duality"}))->capture_default_str();
  sector_check->add_option("--n", o.n, "Box count; every admissible diagram is checked");
  sector_check->add_option("--diagram", o.diagram, "Check a single diagram");

  auto* jones = app.add_subcommand("jones", "Jones evaluation");
  jones->require_subcommand(1);
  auto* jones_eval_cmd = jones->add_subcommand("eval", "Evaluate on a braid closure");
  jones_eval_cmd->add_option("--n", o.n, "Strands")->required();
  jones_eval_cmd->add_option("--r", o.r, "Root order")->required();
  jones_eval_cmd->add_option("--chirality", o.chirality)->capture_default_str();
  jones_eval_cmd->add_option("--word", o.word, "Signed letters, e.g. \"1 -2 1\"")->required();
  jones_eval_cmd->add_flag("--oracle", o.oracle, "Cross-check against the bracket state sum");
  add_output(jones_eval_cmd);

  auto* classify = app.add_subcommand("classify", "Predicted closed image of a sector");
  add_theory(classify);
  add_output(classify);
  classify->add_option("--diagram", o.diagram)->required();
  classify->add_option("--n", o.n, "Strands")->required();

  auto* stats = app.add_subcommand("stats", "Random-word statistics");
  stats->require_subcommand(1);
  auto* stats_sample = stats->add_subcommand("sample", "Sample J over random words");
  stats_sample->add_option("--n", o.n)->required();
  stats_sample->add_option("--r", o.r)->required();
  stats_sample->add_option("--chirality", o.chirality)->capture_default_str();
  stats_sample->add_option("--length", o.length)->capture_default_str();
  stats_sample->add_option("--count", o.count)->capture_default_str();
  stats_sample->add_option("--seed", o.seed)->required();
  stats_sample->add_option("--filter", o.filter)->check(CLI::IsMember({"all", "knots"}))->capture_default_str();
  add_output(stats_sample);
  auto* stats_weights = stats->add_subcommand("weights", "Sum of squared weights");
  stats_weights->add_option("--n", o.n)->required();
  stats_weights->add_option("--r", o.r)->required();
  add_output(stats_weights);

  auto* net = app.add_subcommand("net", "Word-image nets");
  net->require_subcommand(1);
  auto* net_cover = net->add_subcommand("cover", "Covering radius profile");
  add_theory(net_cover);
  add_output(net_cover);
  net_cover->add_option("--diagram", o.diagram)->required();
  net_cover->add_option("--maxlen", o.maxlen)->capture_default_str();
  net_cover->add_option("--targets", o.targets)->capture_default_str();
  net_cover->add_option("--seed", o.seed)->required();
  auto* net_nearest = net->add_subcommand("nearest", "Nearest word to a target");
  add_theory(net_nearest);
  add_output(net_nearest);
  net_nearest->add_option("--diagram", o.diagram)->required();
  net_nearest->add_option("--maxlen", o.maxlen)->capture_default_str();
  auto* target_word = net_nearest->add_option("--word", o.word, "Target is the image of this word");
  auto* target_seed = net_nearest->add_option("--seed", o.seed, "Target is a seeded Haar element");
  net_nearest->add_option("--target-index", o.target_index)->capture_default_str();
  target_word->excludes(target_seed);

  auto* fib = app.add_subcommand("fib", "Fibonacci theory");
  fib->require_subcommand(1);
  auto* fib_dims = fib->add_subcommand("dims", "Labeled surface dimension");
  fib_dims->add_option("--g", o.genus)->capture_default_str();
  fib_dims->add_option("--m", o.m)->capture_default_str();
  fib_dims->add_option("--n2", o.n2)->capture_default_str();
  add_output(fib_dims);
  auto* fib_check = fib->add_subcommand("check", "Four-holed sphere representation checks");
  fib_check->add_option("--bound", o.bound)->capture_default_str();
  fib_check->add_option("--tol", o.tol)->capture_default_str();
  add_output(fib_check);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    std::ostringstream text;
    int code = kOk;
    auto finish_json = [&](json body, const json& config) {
      body["config"] = config;
      text << body.dump(2) << '\n';
    };

    if (sector_build->parsed()) {
      HeckeParams p(o.k, o.r, o.chirality);
      Sector s = build_sector(Partition::parse(o.diagram), p);
      json body = io::sector_json(s);
      body["relations"] = io::relations_json(relation_report(s));
      body["tolerances"] = detail::tolerances_relations();
      finish_json(body, {{"command", "sector build"}, {"diagram", o.diagram}, {"k", o.k}, {"r", o.r},
                         {"chirality", o.chirality}});
    } else if (sector_check->parsed()) {
      bool ok = true;
      json body = detail::sector_check(o, ok);
      finish_json(body, {{"command", "sector check"}, {"suite", o.suite}, {"n", o.n}, {"diagram", o.diagram},
                         {"k", o.k}, {"r", o.r}, {"chirality", o.chirality}});
      if (!ok)
        code = kCheckFailed;
    } else if (jones_eval_cmd->parsed()) {
      HeckeParams p(2, o.r, o.chirality);
      BraidWord w = BraidWord::parse(o.n, o.word);
      JonesEvaluation ev = jones_eval(w, p);
      json body = io::jones_json(ev);
      json tol = {{"construction", 1e-12}, {"relations", 1e-10}};
      if (o.oracle) {
        cplx b = kauffman_oracle(w, p);
        const double diff = std::abs(b - ev.value);
        body["oracle"] = {{"re", b.real()}, {"im", b.imag()}, {"diff", diff}, {"pass", diff <= 1e-8}};
        tol["oracle"] = 1e-8;
        if (diff > 1e-8)
          code = kCheckFailed;
      }
      body["tolerances"] = tol;
      finish_json(body, {{"command", "jones eval"}, {"n", o.n}, {"r", o.r}, {"chirality", o.chirality},
                         {"word", w.to_string()}, {"oracle", o.oracle}});
    } else if (classify->parsed()) {
      HeckeParams p(o.k, o.r, o.chirality);
      Partition lam = Partition::parse(o.diagram);
      json body = io::classification_json(classify_image(lam, p, o.n));
      if (is_admissible_diagram(lam, p)) {
        body["tile"] = io::tile_json(tile_of(lam, p));
        RConjugate c = r_conjugate(lam, p);
        body["r_conjugate"] = c.diagram.to_string();
        body["r_symmetric"] = c.symmetric;
      }
      finish_json(body, {{"command", "classify"}, {"diagram", o.diagram}, {"n", o.n}, {"k", o.k}, {"r", o.r},
                         {"chirality", o.chirality}});
    } else if (stats_sample->parsed()) {
      SampleConfig cfg;
      cfg.n = o.n;
      cfg.r = o.r;
      cfg.chirality = o.chirality;
      cfg.word_length = o.length;
      cfg.sample_count = o.count;
      cfg.seed = *o.seed;
      cfg.filter = o.filter == "knots" ? SampleFilter::KnotsOnly : SampleFilter::All;
      cfg.threads = o.threads;
      const double sigma = weight_sum_sq(o.n, HeckeParams(2, o.r, o.chirality)).sum;
      EmpiricalDistribution d = sample_distribution(cfg);
      json config = io::sample_config_json(cfg);
      config["command"] = "stats sample";
      if (o.format == "csv") {
        text << detail::csv_header(config);
        io::histogram_csv(text, histogram(d, sigma));
      } else {
        json body = io::gaussian_json(gaussian_compare(d, sigma), d);
        body["histogram"] = {{"bins", 101}, {"range", 4.0 * std::sqrt(sigma)}};
        finish_json(body, config);
      }
    } else if (stats_weights->parsed()) {
      HeckeParams p(2, o.r);
      WeightSum ws = weight_sum_sq(o.n, p);
      const double s = std::sin(2.0 * std::numbers::pi / o.r);
      json body = {{"sum", ws.sum},
                   {"closed_form", ws.closed_form},
                   {"difference", ws.sum - ws.closed_form},
                   {"uncorrected_constant", o.r / (s * s)},
                   {"tolerances", {{"identity", 1e-10}}},
                   {"in_stable_range", o.n >= o.r - 2}};
      finish_json(body, {{"command", "stats weights"}, {"n", o.n}, {"r", o.r}});
    } else if (net_cover->parsed()) {
      HeckeParams p(o.k, o.r, o.chirality);
      Sector s = build_sector(Partition::parse(o.diagram), p);
      NetReport rep = covering_profile(s, o.maxlen, o.targets, *o.seed, o.threads);
      json config = {{"command", "net cover"}, {"diagram", o.diagram}, {"k", o.k}, {"r", o.r},
                     {"chirality", o.chirality}, {"maxlen", o.maxlen}, {"targets", o.targets}, {"seed", *o.seed},
                     {"dedup_resolution", WordNet::kResolution}};
      if (o.format == "csv") {
        text << detail::csv_header(config);
        io::net_csv(text, rep);
      } else {
        finish_json(io::net_json(rep), config);
      }
    } else if (net_nearest->parsed()) {
      HeckeParams p(o.k, o.r, o.chirality);
      Sector s = build_sector(Partition::parse(o.diagram), p);
      ComplexMatrix target;
      json config = {{"command", "net nearest"}, {"diagram", o.diagram}, {"k", o.k}, {"r", o.r},
                     {"chirality", o.chirality}, {"maxlen", o.maxlen}};
      if (o.seed) {
        target = net_target(s.dim(), *o.seed, o.target_index);
        config["seed"] = *o.seed;
        config["target_index"] = o.target_index;
      } else {
        BraidWord tw = BraidWord::parse(s.strands(), o.word);
        target = evaluate_word(s, tw);
        config["word"] = tw.to_string();
      }
      NearestWord nw = nearest_word(s, target, o.maxlen);
      finish_json({{"word", nw.word.to_string()}, {"dist", nw.dist}, {"tolerances", {{"unitarity", 1e-8}}}},
                  config);
    } else if (fib_dims->parsed()) {
      LabeledSurface surf{o.genus, o.m, o.n2};
      finish_json({{"g", o.genus}, {"m", o.m}, {"n2", o.n2}, {"dim", space_dim(surf)},
                   {"tolerances", {{"integrality", 1e-9}}}},
                  {{"command", "fib dims"}, {"g", o.genus}, {"m", o.m}, {"n2", o.n2}});
    } else if (fib_check->parsed()) {
      FibRep04 rep = build_rep04();
      const double braid = braid_relation_defect(rep);
      const double invol = involution_defect(rep.fusion);
      const double variant_unitarity = ::jwrep::detail::unitarity_defect(rep.sign_variant);
      ComplexMatrix s1s2 = rep.sigma1 * rep.sigma2;
      PowerScan scan = scan_powers(s1s2, o.bound, o.tol);
      std::optional<int> ord1 = projective_order_2x2(rep.sigma1);
      std::optional<int> ord12 = projective_order_2x2(s1s2);
      const bool infinite = !scan.first_return;
      const bool ok = braid <= 1e-10 && invol <= 1e-12 && infinite && ord1 == 10;
      json body = io::rep04_json(rep);
      body["braid_defect"] = braid;
      body["fusion_involution_defect"] = invol;
      body["sign_variant_unitarity_defect"] = variant_unitarity;
      body["sigma1_projective_order"] = ord1 ? json(*ord1) : json(nullptr);
      body["sigma1_sigma2_projective_order"] = ord12 ? json(*ord12) : json(nullptr);
      body["sigma1_sigma2_scan"] = {{"first_return", scan.first_return ? json(*scan.first_return) : json(nullptr)},
                                    {"closest_power", scan.closest_power},
                                    {"closest_distance", scan.closest_distance},
                                    {"infinite_order_certified", infinite}};
      body["tolerances"] = {{"braid", 1e-10}, {"fusion", 1e-12}, {"identity_return", o.tol}};
      body["pass"] = ok;
      finish_json(body, {{"command", "fib check"}, {"bound", o.bound}, {"tol", o.tol}});
      if (!ok)
        code = kCheckFailed;
    }
    detail::emit(o, text.str(), out);
    return code;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const StructuralError& e) {
    err << "check failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::logic_error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  }
}

} // namespace jwrep::cli
