#include "streamcode/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "streamcode/block_code.hpp"
#include "streamcode/bounds.hpp"
#include "streamcode/channel.hpp"
#include "streamcode/io.hpp"
#include "streamcode/omp_kernels.hpp"
#include "streamcode/search.hpp"
#include "streamcode/streaming.hpp"
#include "streamcode/sweeps.hpp"

namespace sc {

namespace {

using ojson = nlohmann::ordered_json;

// "k=4" style arguments; every expected key must appear exactly once.
std::map<std::string, std::size_t> parse_assignments(const std::vector<std::string>& items,
                                                     const std::vector<std::string>& keys) {
  std::map<std::string, std::size_t> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw std::invalid_argument("unknown key '" + key + "'");
    if (out.count(key)) throw std::invalid_argument("key '" + key + "' given twice");
    out[key] = std::stoul(item.substr(eq + 1));
  }
  for (const auto& k : keys)
    if (!out.count(k)) throw std::invalid_argument("missing " + k + "=...");
  return out;
}

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// "w=5..12" or "w=7"
std::map<std::string, Range> parse_ranges(const std::vector<std::string>& items, const std::vector<std::string>& keys) {
  std::map<std::string, Range> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("expected key=lo..hi, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) throw std::invalid_argument("unknown key '" + key + "'");
    const std::string body = item.substr(eq + 1);
    const auto dots = body.find("..");
    Range r;
    r.lo = std::stoul(body.substr(0, dots));
    r.hi = dots == std::string::npos ? r.lo : std::stoul(body.substr(dots + 2));
    if (r.hi < r.lo) throw std::invalid_argument("empty range for " + key);
    out[key] = r;
  }
  for (const auto& k : keys)
    if (!out.count(k)) throw std::invalid_argument("missing " + k + "=lo..hi");
  return out;
}

// Smallest binary field with at least `length` elements.
std::size_t default_order(std::size_t length) {
  std::size_t q = 2;
  while (q < length) q *= 2;
  return q;
}

struct ModelFlags {
  std::vector<std::size_t> sw, mbsw, sw_err, mbsw_err;

  void attach(CLI::App* app, bool errors) {
    app->add_option("--sw", sw, "(a,w)-SW erasures: A W")->expected(2);
    app->add_option("--mbsw", mbsw, "(z,b,w)-MBSW erasures: Z B W")->expected(3);
    if (errors) {
      app->add_option("--sw-err", sw_err, "(a,w)-SW errors: A W")->expected(2);
      app->add_option("--mbsw-err", mbsw_err, "(z,b,w)-MBSW errors: Z B W")->expected(3);
    }
  }

  std::optional<ChannelModel> model() const {
    std::optional<ChannelModel> m;
    auto pick = [&](ChannelModel c) {
      if (m) throw std::invalid_argument("give exactly one channel model");
      m = c;
    };
    if (!sw.empty()) pick(ChannelModel::sw(sw[0], sw[1]));
    if (!mbsw.empty()) pick(ChannelModel::mbsw(mbsw[0], mbsw[1], mbsw[2]));
    if (!sw_err.empty()) pick(ChannelModel::sw_err(sw_err[0], sw_err[1]));
    if (!mbsw_err.empty()) pick(ChannelModel::mbsw_err(mbsw_err[0], mbsw_err[1], mbsw_err[2]));
    return m;
  }

  ChannelModel required() const {
    auto m = model();
    if (!m) throw std::invalid_argument("a channel model flag is required");
    return *m;
  }
};

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

ojson code_summary(const SystematicCode& code) {
  return {{"n", code.n()}, {"k", code.k()}, {"field", code.field()->name()}, {"tag", code.construction().tag}};
}

std::string pattern_csv_line(const ErasurePattern& p) {
  std::string s = erasures_to_csv({p});
  s.pop_back();
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delay-constrained streaming codes over sliding-window channels", "streamcode"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a code and print its descriptor");
  std::vector<std::size_t> c_mds, c_sw, c_sw_err, c_mbsw;
  std::vector<std::string> c_multi;
  std::size_t c_gf = 0;
  bool c_cauchy = false;
  std::string c_output;
  construct->add_option("--mds", c_mds, "[n,k] MDS code: N K")->expected(2);
  construct->add_option("--sw", c_sw, "rate-optimal (a,w)-SW erasure code: A W")->expected(2);
  construct->add_option("--sw-err", c_sw_err, "rate-optimal (a,w)-SW error code: A W")->expected(2);
  construct->add_option("--multi-burst", c_multi, "interleaved MDS code: k=K z=Z b=B")->expected(3);
  construct->add_option("--mbsw", c_mbsw, "rate-optimal (z,b,w)-MBSW code: Z B W")->expected(3);
  construct->add_option("--gf", c_gf, "field order q (default: smallest 2^m that fits)");
  construct->add_flag("--cauchy", c_cauchy, "Cauchy instead of Vandermonde MDS parity");
  construct->add_option("-o,--output", c_output, "descriptor path (default: stdout)");

  // verify-code
  auto* verify = app.add_subcommand("verify-code", "check delay-tau decodability over a pattern family");
  std::string v_code;
  std::size_t v_tau = 0;
  ModelFlags v_model;
  std::vector<std::size_t> v_bursts;
  std::size_t v_erasures = 0;
  int v_jobs = 0;
  verify->add_option("--code", v_code, "code descriptor")->required();
  verify->add_option("--tau", v_tau, "decoding delay")->required();
  v_model.attach(verify, false);
  verify->add_option("--bursts", v_bursts, "all (z,b)-bursts on [0:n-1]: Z B")->expected(2);
  verify->add_option("--erasures", v_erasures, "all patterns with at most A erasures");
  verify->add_option("--jobs", v_jobs, "worker threads");

  // simulate
  auto* sim = app.add_subcommand("simulate", "encode, apply a channel pattern, decode, report");
  std::string s_code, s_pattern, s_messages;
  std::size_t s_tau = 0;
  std::size_t s_horizon = 0;
  std::uint64_t s_seed = 1;
  bool s_periodic = false;
  ModelFlags s_model;
  sim->add_option("--code", s_code, "code descriptor")->required();
  sim->add_option("--tau", s_tau, "decoding delay")->required();
  s_model.attach(sim, true);
  sim->add_option("--pattern", s_pattern, "pattern file: CSV 0/1 flags or JSON [{t, packet}]");
  sim->add_flag("--periodic", s_periodic, "periodic MBSW pattern over the whole stream");
  sim->add_option("--messages", s_messages, "messages as a JSON nested array");
  sim->add_option("--horizon", s_horizon, "number of message packets");
  sim->add_option("--seed", s_seed, "seed for random messages");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "rate bounds as CSV");
  std::vector<std::string> b_grid, b_sw_grid;
  bounds->add_option("--grid", b_grid, "MBSW grid: z=lo..hi b=lo..hi w=lo..hi")->expected(3);
  bounds->add_option("--sw-grid", b_sw_grid, "SW grid: a=lo..hi w=lo..hi")->expected(2);

  // enumerate-patterns
  auto* enumerate = app.add_subcommand("enumerate-patterns", "list admissible erasure patterns");
  ModelFlags e_model;
  std::size_t e_horizon = 0;
  std::optional<std::size_t> e_bound;
  bool e_count = false;
  e_model.attach(enumerate, false);
  enumerate->add_option("--horizon", e_horizon, "pattern length")->required();
  enumerate->add_option("--support-bound", e_bound, "last slot that may be erased");
  enumerate->add_flag("--count-only", e_count, "print only the count");

  // equivalence-check
  auto* equiv = app.add_subcommand("equivalence-check", "exhaustive error-decoding sweep");
  std::optional<std::size_t> q_a, q_z, q_b;
  std::size_t q_w = 0;
  std::size_t q_gf = 8;
  std::size_t q_horizon = 10;
  std::optional<std::size_t> q_bound, q_samples;
  std::uint64_t q_seed = 1;
  std::string q_code;
  int q_jobs = 0;
  equiv->add_option("--a", q_a, "errors per window (SW_ERR)");
  equiv->add_option("--z", q_z, "bursts per window (MBSW_ERR)");
  equiv->add_option("--b", q_b, "burst length (MBSW_ERR)");
  equiv->add_option("--w", q_w, "window length")->required();
  equiv->add_option("--gf", q_gf, "field order q");
  equiv->add_option("--code", q_code, "use this code instead of the default construction");
  equiv->add_option("--horizon", q_horizon, "message packets per stream");
  equiv->add_option("--support-bound", q_bound, "last slot that may carry an error (default horizon-1)");
  equiv->add_option("--samples", q_samples, "random nonzero error packets per support instead of all unit multiples");
  equiv->add_option("--seed", q_seed, "seed for messages and sampled errors");
  equiv->add_option("--jobs", q_jobs, "worker threads");

  // search-nonexistence
  auto* search = app.add_subcommand("search-nonexistence", "exhaustive search over systematic codes");
  std::size_t r_n = 0, r_k = 0, r_z = 0, r_b = 0, r_tau = 0, r_gf = 2;
  std::uint64_t r_resume = 0;
  std::uint64_t r_max = std::uint64_t{1} << 24;
  int r_jobs = 0;
  search->add_option("--n", r_n)->required();
  search->add_option("--k", r_k)->required();
  search->add_option("--z", r_z)->required();
  search->add_option("--b", r_b)->required();
  search->add_option("--tau", r_tau)->required();
  search->add_option("--gf", r_gf, "field order q");
  search->add_option("--jobs", r_jobs, "worker threads");
  search->add_option("--resume-from", r_resume, "candidate cursor to start from");
  search->add_option("--max-space", r_max, "refuse larger candidate spaces");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (construct->parsed()) {
      const int given = !c_mds.empty() + !c_sw.empty() + !c_sw_err.empty() + !c_multi.empty() + !c_mbsw.empty();
      if (given != 1) throw std::invalid_argument("give exactly one of --mds, --sw, --sw-err, --multi-burst, --mbsw");
      const MdsKind kind = c_cauchy ? MdsKind::cauchy : MdsKind::vandermonde;
      auto field_for = [&](std::size_t length) { return Field::of_order(static_cast<std::uint32_t>(c_gf ? c_gf : default_order(length))); };
      std::optional<SystematicCode> code;
      if (!c_mds.empty()) {
        code = build_mds(c_mds[0], c_mds[1], field_for(c_mds[0]), kind);
      } else if (!c_sw.empty() || !c_sw_err.empty()) {
        const bool errors = !c_sw_err.empty();
        const auto& p = errors ? c_sw_err : c_sw;
        const std::size_t a = p[0], w = p[1];
        const std::size_t redundancy = errors ? 2 * a : a;
        if (a == 0 || redundancy >= w)
          throw std::invalid_argument(errors ? "infeasible: need 0 < 2a < w" : "infeasible: need 0 < a < w");
        code = build_mds(w, w - redundancy, field_for(w), kind);
      } else if (!c_multi.empty()) {
        const auto kv = parse_assignments(c_multi, {"k", "z", "b"});
        const std::size_t k = kv.at("k"), z = kv.at("z"), b = kv.at("b");
        code = build_multi_burst(k, z, b, field_for(b ? k / b + z : 2));
      } else {
        const std::size_t z = c_mbsw[0], b = c_mbsw[1], w = c_mbsw[2];
        if (z == 0 || b == 0 || w <= z * b) throw std::invalid_argument("infeasible: need z, b >= 1 and w > zb");
        if (!de_achievable(z, b, w))
          throw std::invalid_argument("infeasible: b does not divide w-1, so no diagonally embedded code meets the "
                                      "MBSW rate bound");
        const std::size_t k = w - 1 - (z - 1) * b;
        code = build_multi_burst(k, z, b, field_for(k / b + z));
      }
      write_output(code_to_json(*code), c_output, out);
      return 0;
    }

    if (verify->parsed()) {
      set_worker_count(v_jobs);
      const SystematicCode code = code_from_json(read_text_file(v_code));
      std::vector<ErasurePattern> family;
      std::string label;
      const auto model = v_model.model();
      const int given = model.has_value() + !v_bursts.empty() + (v_erasures > 0);
      if (given != 1) throw std::invalid_argument("give exactly one of --sw, --mbsw, --bursts, --erasures");
      if (model) {
        family = block_family(*model, code.n());
        label = model->to_string();
      } else if (!v_bursts.empty()) {
        family = burst_family(code.n(), v_bursts[0], v_bursts[1]);
        label = "(" + std::to_string(v_bursts[0]) + "," + std::to_string(v_bursts[1]) + ")-bursts";
      } else {
        family = random_erasure_family(code.n(), v_erasures);
        label = "<=" + std::to_string(v_erasures) + " erasures";
      }
      const bool fast = v_tau >= code.k() && v_tau <= code.n() - 1;
      const VerifyResult r = fast ? verify_delay_decodable(code, v_tau, family)
                                  : verify_delay_decodable_general(code.generator(), v_tau, family);
      ojson j;
      j["code"] = code_summary(code);
      j["tau"] = v_tau;
      j["family"] = label;
      j["patterns"] = family.size();
      j["decodable"] = r.decodable;
      j["patterns_checked"] = r.patterns_checked;
      if (r.counterexample) {
        j["counterexample"] = {{"index", r.counterexample->pattern_index},
                               {"pattern", pattern_csv_line(r.counterexample->pattern)},
                               {"symbol", r.counterexample->symbol}};
      } else {
        j["counterexample"] = nullptr;
      }
      out << j.dump(2) << "\n";
      return 0;
    }

    if (sim->parsed()) {
      const SystematicCode code = code_from_json(read_text_file(s_code));
      const ChannelModel model = s_model.required();
      std::vector<ChannelRealization> realizations;
      if (s_periodic == !s_pattern.empty()) throw std::invalid_argument("give exactly one of --pattern, --periodic");
      std::size_t horizon = s_horizon;
      std::optional<FieldMatrix> messages;
      if (!s_messages.empty()) {
        messages = messages_from_json(read_text_file(s_messages), code.field(), code.k());
        if (!horizon) horizon = messages->rows();
        if (horizon != messages->rows()) throw std::invalid_argument("--horizon disagrees with the messages file");
      }
      if (s_periodic) {
        if (!model.is_burst() || model.is_error()) throw std::invalid_argument("--periodic needs an --mbsw model");
        if (!horizon) throw std::invalid_argument("--periodic needs --horizon or --messages");
        const std::size_t period = model.w - 1 + model.b;
        const std::size_t stream = horizon + flush_length(code, s_tau);
        realizations.emplace_back(periodic_mbsw_pattern(model.z, model.b, model.w, (stream + period - 1) / period));
      } else {
        const std::string text = read_text_file(s_pattern);
        const auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '[') {
          realizations.emplace_back(errors_from_json(text, code.field(), code.n(), horizon));
        } else {
          for (auto& p : erasures_from_csv(text)) realizations.emplace_back(std::move(p));
        }
      }
      if (!horizon) {
        for (const auto& r : realizations)
          horizon = std::max(horizon, std::visit([](const auto& p) { return p.horizon(); }, r));
      }
      if (!messages) messages = random_messages(code.field(), horizon, code.k(), s_seed);
      std::vector<std::string> reports;
      for (const auto& r : realizations) reports.push_back(report_to_json(simulate(code, s_tau, model, r, *messages)));
      if (reports.size() == 1) {
        out << reports.front();
      } else {
        ojson arr = ojson::array();
        for (const auto& r : reports) arr.push_back(ojson::parse(r));
        out << arr.dump(2) << "\n";
      }
      return 0;
    }

    if (bounds->parsed()) {
      if (b_grid.empty() == b_sw_grid.empty()) throw std::invalid_argument("give exactly one of --grid, --sw-grid");
      auto cell = [](auto&& f) -> std::string {
        try {
          return f();
        } catch (const std::invalid_argument&) {
          return "NA";
        }
      };
      if (!b_grid.empty()) {
        const auto g = parse_ranges(b_grid, {"z", "b", "w"});
        out << "z,b,w,mbsw_bound,mbsw_error_bound,de_achievable\n";
        for (std::size_t z = g.at("z").lo; z <= g.at("z").hi; ++z)
          for (std::size_t b = g.at("b").lo; b <= g.at("b").hi; ++b)
            for (std::size_t w = g.at("w").lo; w <= g.at("w").hi; ++w) {
              out << z << "," << b << "," << w << ","
                  << cell([&] { return rate_mbsw_bound(z, b, w).value.to_string(); }) << ","
                  << cell([&] { return rate_mbsw_error_bound(z, b, w).value.to_string(); }) << ","
                  << cell([&] { return std::string(de_achievable(z, b, w) ? "true" : "false"); }) << "\n";
            }
      } else {
        const auto g = parse_ranges(b_sw_grid, {"a", "w"});
        out << "a,w,erasure_rate,error_rate\n";
        for (std::size_t a = g.at("a").lo; a <= g.at("a").hi; ++a)
          for (std::size_t w = g.at("w").lo; w <= g.at("w").hi; ++w)
            out << a << "," << w << "," << cell([&] { return rate_sw_erasure(a, w).value.to_string(); }) << ","
                << cell([&] { return rate_sw_error(a, w).value.to_string(); }) << "\n";
      }
      return 0;
    }

    if (enumerate->parsed()) {
      const ChannelModel model = e_model.required();
      if (e_count) {
        ojson j;
        j["model"] = model.to_string();
        j["horizon"] = e_horizon;
        j["support_bound"] = e_bound ? ojson(*e_bound) : ojson(nullptr);
        j["count"] = count_admissible(model, e_horizon, e_bound);
        out << j.dump(2) << "\n";
      } else {
        for_each_admissible(model, e_horizon, e_bound, [&](const ErasurePattern& p) {
          out << pattern_csv_line(p) << "\n";
          return true;
        });
      }
      return 0;
    }

    if (equiv->parsed()) {
      set_worker_count(q_jobs);
      const FieldPtr field = Field::of_order(static_cast<std::uint32_t>(q_gf));
      std::optional<ChannelModel> model;
      std::optional<SystematicCode> code;
      if (q_a && !q_z && !q_b) {
        model = ChannelModel::sw_err(*q_a, q_w);
        if (*q_a == 0 || 2 * *q_a >= q_w) throw std::invalid_argument("infeasible: need 0 < 2a < w");
        if (q_code.empty()) code = build_mds(q_w, q_w - 2 * *q_a, field);
      } else if (q_z && q_b && !q_a) {
        const std::size_t z = *q_z, b = *q_b, w = q_w;
        model = ChannelModel::mbsw_err(z, b, w);
        if (w <= 2 * z * b) throw std::invalid_argument("infeasible: need w > 2zb");
        if (q_code.empty()) {
          // largest multiple of b whose delay max(k+(2z-1)b, 2zb) stays within w-1
          const std::size_t k = (w - 1 - (2 * z - 1) * b) / b * b;
          if (k == 0) throw std::invalid_argument("no interleaved code fits the window");
          code = build_multi_burst(k, 2 * z, b, field);
        }
      } else {
        throw std::invalid_argument("give --a, or --z and --b");
      }
      if (!q_code.empty()) code = code_from_json(read_text_file(q_code));
      const std::size_t tau = q_w - 1;
      ErrorSweepOptions opt;
      opt.horizon = q_horizon;
      opt.support_bound = q_bound ? *q_bound : q_horizon - 1;
      opt.seed = q_seed;
      if (q_samples) {
        opt.values = ErrorValues::random;
        opt.samples = *q_samples;
      }
      const SweepResult r = error_sweep(*code, tau, *model, opt);
      ojson j;
      j["model"] = model->to_string();
      j["code"] = code_summary(*code);
      j["tau"] = tau;
      j["horizon"] = opt.horizon;
      j["support_bound"] = *opt.support_bound;
      j["values"] = q_samples ? "random" : "unit-multiples";
      j["patterns"] = r.patterns;
      j["exact"] = r.exact;
      j["ambiguous"] = r.ambiguous;
      j["failed"] = r.failed;
      out << j.dump(2) << "\n";
      return 0;
    }

    if (search->parsed()) {
      set_worker_count(r_jobs);
      const FieldPtr field = Field::of_order(static_cast<std::uint32_t>(r_gf));
      SearchOptions opt;
      opt.resume_from = r_resume;
      opt.max_space = r_max;
      opt.progress = [&](std::uint64_t cursor, std::uint64_t space) {
        err << "progress " << cursor << "/" << space << "\n";
      };
      const SearchResult r = search_nonexistence(r_n, r_k, r_z, r_b, r_tau, field, opt);
      ojson j;
      j["n"] = r_n;
      j["k"] = r_k;
      j["z"] = r_z;
      j["b"] = r_b;
      j["tau"] = r_tau;
      j["field"] = field->name();
      j["space"] = r.space;
      j["found"] = r.found;
      j["witness_index"] = r.witness_index ? ojson(*r.witness_index) : ojson(nullptr);
      j["witness"] = r.witness ? ojson::parse(code_to_json(*r.witness)) : ojson(nullptr);
      j["exhausted"] = r.exhausted;
      j["examined"] = r.examined;
      out << j.dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sc
