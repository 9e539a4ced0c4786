#include "veech/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "veech/json_io.hpp"

namespace veech {

namespace {

// Raised for malformed input that is not an Error from the library.
struct Malformed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct Precondition : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json report(const std::string& command, Json inputs, Json results, bool pass) {
  return {{"command", command}, {"inputs", std::move(inputs)}, {"results", std::move(results)}, {"pass", pass}};
}

QuarticParams params_from(const std::vector<std::string>& abc) {
  try {
    return {parse_rational(abc.at(0)), parse_rational(abc.at(1)), parse_rational(abc.at(2))};
  } catch (const std::exception& e) {
    throw Malformed(e.what());
  }
}

Rational rational_from(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw Malformed(e.what());
  }
}

Json params_json(const QuarticParams& p) { return {{"a", p.a.str()}, {"b", p.b.str()}, {"c", p.c.str()}}; }

Json rational_set(const std::set<Rational>& s) {
  Json j = Json::array();
  for (const auto& x : s) j.push_back(x.str());
  return j;
}

// Exhaustive conjugation check over every trace-0 element of SL2(F_p).
Json conj_lemma(std::int64_t p, bool& pass) {
  std::uint64_t total = 0, to_s = 0, to_s_inv = 0, failures = 0;
  for (const auto& T : sl2_enumerate(p)) {
    if (T.trace() != 0) continue;
    ++total;
    const auto c = conj_to_rotation(T);
    const auto target = c.sign > 0 ? MatMod::S(p) : MatMod::S(p).inverse();
    if (c.B * T * c.B.inverse() != target) ++failures;
    (c.sign > 0 ? to_s : to_s_inv) += 1;
  }
  pass = failures == 0 && total > 0;
  return {{"trace_zero_count", total}, {"conjugate_to_S", to_s}, {"conjugate_to_S_inverse", to_s_inv},
          {"failures", failures}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Veech groups of origamis and the quartic family"};
  app.require_subcommand(1);
  bool timing = false;
  app.add_flag("--timing", timing, "Include wall-clock seconds in the JSON report");

  // build
  auto* build = app.add_subcommand("build", "Construct W or D_P and print it as origami JSON");
  std::string kind;
  std::int64_t n = 0, p = 0, q = 0;
  std::string flavor = "00";
  build->add_option("kind", kind, "w or dp")->required()->check(CLI::IsMember({"w", "dp"}));
  build->add_option("--n", n, "Torsion order n (dp)");
  build->add_option("--p", p, "First coordinate of P (dp)");
  build->add_option("--q", q, "Second coordinate of P (dp)");
  build->add_option("--flavor", flavor, "Monodromy along x^n, y^n: 11, 00, 10 or 01 (dp)");

  // veech
  auto* veech = app.add_subcommand("veech", "Veech group of an origami read as JSON");
  std::string input;
  bool dot = false;
  veech->add_option("--input", input, "Origami JSON file (default: stdin)");
  veech->add_flag("--dot", dot, "Emit the orbit graph as Graphviz DOT instead of JSON");

  // verify-theorem
  auto* verify = app.add_subcommand("verify-theorem", "Compare the computed Veech group of D_P with the congruence prediction");
  std::int64_t vn = 0, vp = 0, vq = 0;
  verify->add_option("--n", vn)->required();
  verify->add_option("--p", vp)->required();
  verify->add_option("--q", vq)->required();

  // quartic
  auto* quartic = app.add_subcommand("quartic", "Computations in the quartic family C_abc");
  quartic->require_subcommand(1);
  auto* singular = quartic->add_subcommand("singular", "Singularity criterion for (a, b, c)");
  std::vector<std::string> abc;
  std::int64_t modulus = 0;
  singular->add_option("abc", abc, "a b c as rationals")->required()->expected(3);
  singular->add_option("--mod", modulus, "Also list singular points over F_q");
  auto* qorbit = quartic->add_subcommand("orbit", "Orbit of (a, b, c) under L or L_H");
  std::string group = "L";
  qorbit->add_option("abc", abc, "a b c as rationals")->required()->expected(3);
  qorbit->add_option("--group", group, "L or LH")->check(CLI::IsMember({"L", "LH"}));
  auto* qtransform = quartic->add_subcommand("transform", "Substitute v -> M v into f_abc over Q");
  std::vector<std::string> matrix;
  bool fermat = false;
  qtransform->add_option("abc", abc, "a b c as rationals")->expected(3);
  qtransform->add_option("--matrix", matrix, "Nine rationals, row-major")->expected(9);
  qtransform->add_flag("--fermat", fermat, "Check f_030(x+z, t y, x-z) = 8 f_000 with t^4 = 8");
  auto* qlambda = quartic->add_subcommand("lambda", "Legendre parameter conversions");
  std::string to_a, to_lambda, legendre;
  auto* opt_to_a = qlambda->add_option("--to-a", to_a, "lambda -> a");
  auto* opt_to_l = qlambda->add_option("--to-lambda", to_lambda, "a -> lambda");
  auto* opt_orb = qlambda->add_option("--orbit", legendre, "Legendre orbit of lambda");
  opt_to_a->excludes(opt_to_l)->excludes(opt_orb);
  opt_to_l->excludes(opt_orb);

  // conj-lemma
  auto* conj = app.add_subcommand("conj-lemma", "Conjugate every trace-0 element of SL2(F_p) to S or S^-1");
  std::int64_t cp = 0;
  conj->add_option("--p", cp)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }

  const auto start = std::chrono::steady_clock::now();
  auto emit = [&](Json j) {
    const std::chrono::duration<double> secs = std::chrono::steady_clock::now() - start;
    if (timing) j["wall_clock_ms"] = static_cast<std::int64_t>(secs.count() * 1000);
    out << j.dump(2) << "\n";
    err << "wall-clock: " << secs.count() << " s\n";
  };

  try {
    if (*build) {
      if (kind == "w") {
        out << to_json(build_w()).dump() << "\n";
        return kExitPass;
      }
      const auto f = Flavor::parse(flavor);
      const TorsionConfig cfg(n, p, q);
      if (n % 2 == 0) err << "warning: the congruence description of the Veech group requires odd n\n";
      out << to_json(build_dp(cfg, f)).dump() << "\n";
      return kExitPass;
    }

    if (*veech) {
      std::string text;
      if (input.empty()) {
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      } else {
        std::ifstream file(input);
        if (!file) throw Malformed("cannot open " + input);
        std::ostringstream ss;
        ss << file.rdbuf();
        text = ss.str();
      }
      Json j;
      try {
        j = Json::parse(text);
      } catch (const Json::exception& e) {
        throw Malformed(std::string("malformed JSON: ") + e.what());
      }
      const auto o = origami_from_json(j);
      const auto g = orbit(o);
      if (dot) {
        out << to_dot(g);
        return kExitPass;
      }
      const auto action = g.action();
      Json gens = Json::array();
      std::size_t in_uu = 0;
      for (const auto& A : veech_generators(action)) {
        gens.push_back(to_json(A));
        in_uu += in_gamma_uu(A);
      }
      Json results{{"index", action.size()},
                   {"genus", genus(o)},
                   {"stratum", to_json(stratum(o))},
                   {"generators", gens},
                   {"orbit", to_json(g)},
                   {"congruence_checks",
                    {{"minus_identity_in", veech_contains(action, MatZ::minus_identity())},
                     {"S_in", veech_contains(action, MatZ::S())},
                     {"T_in", veech_contains(action, MatZ::T())},
                     {"generators_in_gamma_uu", in_uu}}}};
      emit(report("veech", {{"degree", o.degree()}}, std::move(results), true));
      return kExitPass;
    }

    if (*verify) {
      std::unique_ptr<TorsionConfig> cfg;
      try {
        cfg = std::make_unique<TorsionConfig>(vn, vp, vq);
      } catch (const Error& e) {
        throw Precondition(e.what());
      }
      TheoremReport rep;
      try {
        rep = verify_theorem(*cfg);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NotOdd || e.code() == ErrorCode::NotGeneralPosition) throw Precondition(e.what());
        throw;
      }
      emit(report("verify-theorem", {{"n", vn}, {"p", vp}, {"q", vq}}, to_json(rep), rep.pass));
      return rep.pass ? kExitPass : kExitFail;
    }

    if (*quartic) {
      if (*singular) {
        const auto prm = params_from(abc);
        Json results{{"singular", is_singular(prm)}, {"criterion_value", criterion_polynomial(prm).str()}};
        Json inputs = params_json(prm);
        if (modulus != 0) {
          Json pts = Json::array();
          for (const auto& pt : singular_points_mod_q(prm, modulus)) pts.push_back(pt);
          results["points_mod_q"] = pts;
          inputs["q"] = modulus;
        }
        emit(report("quartic singular", inputs, results, true));
        return kExitPass;
      }
      if (*qorbit) {
        const auto prm = params_from(abc);
        const auto orb = orbit_under(group == "L" ? param_group_L() : subgroup_L_H(), prm);
        Json pts = Json::array();
        for (const auto& x : orb) pts.push_back(to_json(x));
        Json inputs = params_json(prm);
        inputs["group"] = group;
        emit(report("quartic orbit", inputs, {{"size", orb.size()}, {"orbit", pts}}, true));
        return kExitPass;
      }
      if (*qtransform) {
        if (fermat) {
          Mat3<Root8Ring> M;
          const auto one = Root8Ring::from(1), zero = Root8Ring::from(0), minus = Root8Ring::from(-1);
          M = {{{one, zero, one}, {zero, Root8Ring::t(), zero}, {one, zero, minus}}};
          const auto g = transform_quartic(quartic_form<Root8Ring>({0, 3, 0}), M);
          const auto target = quartic_form<Root8Ring>({0, 0, 0}).scaled(Root8Ring::from(8));
          emit(report("quartic transform", {{"fermat", true}}, {{"form", to_json(g)}, {"equals_8_f000", g == target}},
                      g == target));
          return g == target ? kExitPass : kExitFail;
        }
        if (abc.size() != 3 || matrix.size() != 9) throw Malformed("transform needs a b c and --matrix with 9 entries");
        const auto prm = params_from(abc);
        Mat3<QRing> M;
        for (int k = 0; k < 9; ++k) M[k / 3][k % 3] = QRing{rational_from(matrix[k])};
        const auto g = transform_quartic(quartic_form<QRing>(prm), M);
        Json inputs = params_json(prm);
        inputs["matrix"] = matrix;
        emit(report("quartic transform", inputs, {{"form", to_json(g)}}, true));
        return kExitPass;
      }
      if (*qlambda) {
        Json results, inputs;
        if (*opt_to_a) {
          const auto l = rational_from(to_a);
          inputs = {{"lambda", l.str()}};
          results = {{"a", lambda_a_convert(l, LambdaDirection::LambdaToA).str()}};
        } else if (*opt_to_l) {
          const auto a = rational_from(to_lambda);
          inputs = {{"a", a.str()}};
          results = {{"lambda", lambda_a_convert(a, LambdaDirection::AToLambda).str()}};
        } else if (*opt_orb) {
          const auto l = rational_from(legendre);
          const auto orb = legendre_orbit(l);
          inputs = {{"lambda", l.str()}};
          results = {{"orbit", rational_set(orb)}, {"size", orb.size()}};
        } else {
          throw Malformed("lambda needs one of --to-a, --to-lambda, --orbit");
        }
        emit(report("quartic lambda", inputs, results, true));
        return kExitPass;
      }
    }

    if (*conj) {
      if (cp == 2 || cp < 2 || !is_prime(cp) || cp > 31) throw Precondition("p must be an odd prime at most 31");
      bool pass = false;
      auto results = conj_lemma(cp, pass);
      emit(report("conj-lemma", {{"p", cp}}, std::move(results), pass));
      return pass ? kExitPass : kExitFail;
    }
  } catch (const Precondition& e) {
    err << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const Malformed& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::ExcludedValue:
      case ErrorCode::BadModulus:
      case ErrorCode::NotOdd:
      case ErrorCode::NotGeneralPosition:
      case ErrorCode::EvenModulus:
      case ErrorCode::NotPrime: return kExitPrecondition;
      default: return kExitMalformed;
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace veech
