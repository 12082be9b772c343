#include "palinwidth/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <istream>
#include <ostream>

#include "palinwidth/errors.hpp"
#include "palinwidth/oracle.hpp"
#include "palinwidth/presentations.hpp"
#include "palinwidth/verify.hpp"
#include "palinwidth/word_io.hpp"

namespace palinwidth {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::string group;
  bool json = false;
  std::uint64_t seed = 1;
  std::string word;
  std::string word2;
  std::int64_t n = 1;
  std::string property;
  std::string oracle_mode;
  std::uint64_t trials = 1000;
  std::size_t max_length = 40;
  std::size_t length = 3;
  int depth = 3;
  int exp_bound = 3;
};

// One word in, one output line.
class Session {
 public:
  Session(Presentation pres, const Options& opt) : pres_(std::move(pres)), opt_(opt) {}

  const HnnPresentation* hnn() const { return std::get_if<HnnPresentation>(&pres_); }
  const AmalgamPresentation* amalgam() const { return std::get_if<AmalgamPresentation>(&pres_); }
  const Presentation& presentation() const { return pres_; }

  std::string reduce(const std::string& text) const {
    if (auto* h = hnn()) return emit_word(format_hnn_word(*h, britton_reduce(*h, parse_hnn_word(*h, text))));
    const auto* a = amalgam();
    return emit_word(format_amalgam_word(*a, normal_reduce(*a, parse_amalgam_word(*a, text))));
  }

  std::string eq(const std::string& x, const std::string& y) const {
    bool equal;
    if (auto* h = hnn()) {
      equal = word_equal(*h, parse_hnn_word(*h, x), parse_hnn_word(*h, y));
    } else {
      const auto* a = amalgam();
      equal = amalgam_word_equal(*a, parse_amalgam_word(*a, x), parse_amalgam_word(*a, y));
    }
    return emit_bool("equal", equal);
  }

  std::string sqn(const std::string& text) const {
    const auto* h = hnn();
    if (!h) throw UsageError("sqn is defined for HNN presentations only");
    const auto sig = signature(*h, parse_hnn_word(*h, text));
    if (opt_.json) return ordered_json{{"signature", sig}}.dump();
    std::string out;
    for (int e : sig) {
      if (!out.empty()) out += ' ';
      out += std::to_string(e);
    }
    return out;
  }

  std::string delta(const std::string& text) const {
    std::int64_t d;
    if (auto* h = hnn()) {
      d = delta_hnn(*h, parse_hnn_word(*h, text));
    } else {
      const auto* a = amalgam();
      d = delta_amalgam(*a, parse_amalgam_word(*a, text));
    }
    return opt_.json ? ordered_json{{"delta", d}}.dump() : std::to_string(d);
  }

  std::string palcheck(const std::string& text) const {
    bool pal;
    if (auto* h = hnn()) {
      pal = is_group_palindrome_hnn(*h, parse_hnn_word(*h, text));
    } else {
      const auto* a = amalgam();
      pal = is_group_palindrome_amalgam(*a, parse_amalgam_word(*a, text));
    }
    return emit_bool("palindrome", pal);
  }

  std::string symmetrize(const std::string& text) const {
    std::string word;
    std::string middle;
    if (auto* h = hnn()) {
      const auto form = symmetrize_palindrome_hnn(*h, parse_hnn_word(*h, text));
      word = format_hnn_word(*h, form.word);
      middle = h->base().format(form.middle);
    } else {
      const auto* a = amalgam();
      const auto form = symmetrize_palindrome_amalgam(*a, parse_amalgam_word(*a, text));
      word = format_amalgam_word(*a, form.word);
      const Factor f = form.word.empty() ? Factor::A : form.word[form.word.size() / 2].factor;
      middle = format_amalgam_word(*a, {{f, form.c}});
    }
    if (opt_.json) return ordered_json{{"word", word}, {"middle", middle}}.dump();
    return word;
  }

  std::string lowerbound(const std::string& text) const {
    LowerBoundCertificate cert;
    if (auto* h = hnn()) {
      cert = pal_lower_bound_hnn(*h, parse_hnn_word(*h, text));
    } else {
      const auto* a = amalgam();
      cert = pal_lower_bound_amalgam(*a, parse_amalgam_word(*a, text));
    }
    if (opt_.json) {
      return ordered_json{{"delta", cert.delta}, {"bound", cert.bound}, {"inequality", cert.inequality}}
          .dump();
    }
    return "{\"delta\": " + std::to_string(cert.delta) + ", \"bound\": " + std::to_string(cert.bound) + "}";
  }

  std::string witness(std::int64_t n) const {
    if (auto* h = hnn()) {
      if (h->base().generator_count() == 0) throw UsageError("base group has no generator");
      return emit_word(format_hnn_word(*h, witness_hnn(*h, n, h->base().generator(0))));
    }
    const auto* a = amalgam();
    const Distinguished& d = a->case1_element();
    return emit_word(format_amalgam_word(*a, witness_amalgam(*a, n, {d.factor, d.element}, a->partner())));
  }

  std::string decompose2(const std::string& text) const {
    const auto* a = amalgam();
    if (!a) throw UsageError("decompose2 is defined for amalgamated products only");
    const CosetReps reps = index_two_reps(*a);
    std::vector<std::string> pieces;
    for (const auto& p : index_two_decompose(*a, parse_amalgam_word(*a, text), reps)) {
      pieces.push_back(format_amalgam_word(*a, p));
    }
    if (opt_.json) return ordered_json{{"pieces", pieces}}.dump();
    std::string out;
    for (const auto& p : pieces) {
      if (!out.empty()) out += " | ";
      out += p;
    }
    return out;
  }

 private:
  std::string emit_word(const std::string& w) const {
    return opt_.json ? ordered_json{{"word", w}}.dump() : w;
  }
  std::string emit_bool(const char* key, bool v) const {
    return opt_.json ? ordered_json{{key, v}}.dump() : (v ? "true" : "false");
  }

  Presentation pres_;
  const Options& opt_;
};

int run_verify(const Session& s, const Options& opt, std::ostream& out) {
  if (opt.property == "palindrome-delta") {
    EnumerationConfig cfg;
    cfg.max_length = opt.length;
    cfg.exponent_bound = opt.exp_bound;
    const auto report = verify_palindrome_delta(s.presentation(), cfg);
    if (opt.json) {
      out << ordered_json{{"property", opt.property},
                          {"palindromes", report.palindromes},
                          {"violations", report.violations},
                          {"max_delta", report.max_delta},
                          {"allowed", report.allowed}}
                 .dump()
          << '\n';
    } else {
      out << "property=palindrome-delta palindromes=" << report.palindromes
          << " violations=" << report.violations << " max_delta=" << report.max_delta
          << " allowed=" << report.allowed << '\n';
      if (report.violations) out << "first violation: " << report.first_violation << '\n';
    }
    return report.violations ? kPropertyFailure : kOk;
  }
  SamplerConfig cfg;
  cfg.seed = opt.seed;
  cfg.max_length = opt.max_length;
  VerifyReport report;
  if (opt.property == "quasimorphism") {
    report = verify_quasimorphism(s.presentation(), cfg, opt.trials);
  } else if (opt.property == "signature") {
    report = verify_signature(s.presentation(), cfg, opt.trials);
  } else if (opt.property == "inverse-dk") {
    report = verify_inverse_dk(s.presentation(), cfg, opt.trials);
  } else {
    throw UsageError("unknown property '" + opt.property + "'");
  }
  if (opt.json) {
    ordered_json j{{"property", report.property}, {"trials", report.trials}, {"violations", report.violations}};
    if (opt.property == "quasimorphism") {
      j["max_defect"] = report.max_defect;
      j["allowed"] = report.allowed_defect;
    }
    if (!report.ok()) j["first_violation"] = report.first_violation;
    out << j.dump() << '\n';
  } else {
    out << "property=" << report.property << " trials=" << report.trials << " violations=" << report.violations;
    if (opt.property == "quasimorphism") {
      out << " max_defect=" << report.max_defect << " allowed=" << report.allowed_defect;
    }
    out << '\n';
    if (!report.ok()) out << "first violation: " << report.first_violation << '\n';
  }
  return report.ok() ? kOk : kPropertyFailure;
}

int run_oracle(const Session& s, const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.oracle_mode != "cross-check") throw UsageError("unknown oracle mode '" + opt.oracle_mode + "'");
  EnumerationConfig cfg;
  cfg.max_length = opt.length;
  cfg.depth = opt.depth;
  cfg.exponent_bound = opt.exp_bound;
  const OracleReport report = cross_check(s.presentation(), cfg);
  for (const auto& r : report.records) out << to_json_line(r) << '\n';
  err << "records=" << report.records.size() << " palindromes=" << report.palindromes
      << " resolved=" << report.resolved << " bound_violations=" << report.bound_violations
      << " palindrome_delta_violations=" << report.palindrome_delta_violations << '\n';
  return report.violations() ? kPropertyFailure : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Palindromic length bounds for HNN extensions and amalgamated products", "palinwidth"};
  app.require_subcommand(1);
  app.add_option("--group", opt.group, "bs:M,N, zz, z3z, z4z2z4, or a presentation JSON file")->required();
  app.add_flag("--json", opt.json, "JSON output");
  app.add_option("--seed", opt.seed, "Seed for randomized verification");

  std::map<std::string, CLI::Option*> word_opts;
  const auto word_cmd = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    word_opts[name] = sub->add_option("word", opt.word, "Word; read from stdin (one per line) if absent");
    return sub;
  };
  word_cmd("reduce", "Reduced form");
  word_cmd("sqn", "Signature of an HNN word");
  word_cmd("delta", "Segment quasi-homomorphism");
  word_cmd("palcheck", "Group-palindrome test");
  word_cmd("symmetrize", "Mirrored form of a group-palindrome");
  word_cmd("lowerbound", "Lower bound on palindromic length");
  word_cmd("decompose2", "At most three palindromes (index-two amalgams)");
  auto* eq = app.add_subcommand("eq", "Word problem");
  eq->add_option("w1", opt.word)->required();
  eq->add_option("w2", opt.word2)->required();
  auto* witness = app.add_subcommand("witness", "Witness sequence element");
  witness->add_option("--n", opt.n)->required()->check(CLI::PositiveNumber);
  auto* verify = app.add_subcommand("verify", "Randomized or exhaustive property check");
  verify->add_option("property", opt.property, "quasimorphism|signature|palindrome-delta|inverse-dk")
      ->required();
  verify->add_option("--trials", opt.trials);
  verify->add_option("--max-length", opt.max_length, "Sampled word length");
  verify->add_option("--length", opt.length, "Enumeration length for palindrome-delta");
  verify->add_option("--exp-bound", opt.exp_bound)->check(CLI::PositiveNumber);
  auto* oracle = app.add_subcommand("oracle", "Brute-force cross-check");
  oracle->add_option("mode", opt.oracle_mode, "cross-check")->required();
  oracle->add_option("--length", opt.length);
  oracle->add_option("--depth", opt.depth);
  oracle->add_option("--exp-bound", opt.exp_bound)->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    const Session session(load_presentation(opt.group), opt);
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "eq") {
      out << session.eq(opt.word, opt.word2) << '\n';
      return kOk;
    }
    if (name == "witness") {
      out << session.witness(opt.n) << '\n';
      return kOk;
    }
    if (name == "verify") return run_verify(session, opt, out);
    if (name == "oracle") return run_oracle(session, opt, out, err);

    const auto apply = [&](const std::string& w) -> std::string {
      if (name == "reduce") return session.reduce(w);
      if (name == "sqn") return session.sqn(w);
      if (name == "delta") return session.delta(w);
      if (name == "palcheck") return session.palcheck(w);
      if (name == "symmetrize") return session.symmetrize(w);
      if (name == "lowerbound") return session.lowerbound(w);
      return session.decompose2(w);
    };
    if (word_opts[name]->count() > 0) {
      out << apply(opt.word) << '\n';
      return kOk;
    }
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      out << apply(line) << '\n';
    }
    return kOk;
  } catch (const UnsupportedCase& e) {
    err << "unsupported: " << e.what() << '\n';
    return kUnsupported;
  } catch (const InvariantFailure& e) {
    err << "invariant failure: " << e.what() << '\n';
    return kPropertyFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace palinwidth
