// picard: replays the certificate suites and writes JSON reports.
//
//   picard mobius | universal | glue | qform | galois | kummer [options]
//   picard instance <mobius|universal|f5-kummer|gauss-qform>
//
// Exit status: 0 all checks pass, 1 a check failed (or inconclusive with
// --strict), 2 bad arguments or input files.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "picard/arith.hpp"
#include "picard/errors.hpp"
#include "picard/galois.hpp"
#include "picard/glue.hpp"
#include "picard/kummer.hpp"
#include "picard/mobius.hpp"
#include "picard/projective.hpp"
#include "picard/quadratic_forms.hpp"
#include "picard/serialize.hpp"

using namespace picard;

namespace {

struct Common {
  std::uint64_t seed = 0;
  int degree_bound = 3;
  std::size_t samples = 200;
  bool samples_given = false;
  bool strict = false;
  std::string json_path;
};

Ring integers() {
  TowerSpec spec;
  spec.coeff = CoeffDomain::integers();
  return RingTower::create(spec);
}

Ring ring_or_integers(const std::string& path) { return path.empty() ? integers() : ring_from_json(load_json_file(path)); }

// ---------------------------------------------------------------- glue

// omega = p/q with q dividing some (st)^k.
LocalizedElement parse_omega(const TwoChartCover& cover, const std::string& text) {
  const Ring& r = cover.ring();
  auto slash = text.rfind('/');
  Element num = r->parse(slash == std::string::npos ? text : text.substr(0, slash));
  Element den = slash == std::string::npos ? r->one() : r->parse(text.substr(slash + 1));
  Element st = cover.st();
  for (unsigned k = 0; k <= 8; ++k)
    if (auto q = try_divide(num * st.pow(k), den)) return cover.in_st(*q, k);
  throw PresentationError("omega: denominator " + den.to_string() + " does not divide a power of st");
}

Report glue_instance(const std::string& ring_path, const std::string& s, const std::string& t, const std::string& w,
                     int bound) {
  Ring r = ring_or_integers(ring_path);
  TwoChartCover cover(r->parse(s), r->parse(t));
  LocalizedElement omega = parse_omega(cover, w);
  GluedModule glued(cover, omega);

  Report rep("glue-instance");
  rep.check("local-bases", "omega * 1 = omega and omega * omega^-1 = 1", glued.verify_local_bases(),
            {{"s", cover.s().to_string()},
             {"t", cover.t().to_string()},
             {"omega", omega.to_string()},
             {"omega^-1", glued.omega_inverse().to_string()},
             {"bezout", bezout_to_json(cover.bezout())}});

  // Unit pairs (+-s^i, +-t^j), small |i|, |j| first.
  std::vector<int> order{0};
  for (int k = 1; k <= bound; ++k) order.insert(order.end(), {-k, k});
  auto power = [&](const Element& base, int i, bool in_s) {
    Element one = r->one();
    unsigned n = static_cast<unsigned>(i < 0 ? -i : 0);
    Element num = i > 0 ? base.pow(static_cast<unsigned>(i)) : one;
    return in_s ? cover.in_s(num, n) : cover.in_t(num, n);
  };
  for (int i : order)
    for (int j : order)
      for (int sign : {1, -1}) {
        LocalizedElement u = power(cover.s(), i, true);
        LocalizedElement v = power(cover.t(), j, false);
        if (sign < 0) v = -v;
        FreenessResult f = glued_freeness(glued, u, v);
        if (!f.free) continue;
        Json coords = Json::array();
        for (const auto& c : f.coordinates) coords.push_back(c.to_string());
        rep.check("freeness", "omega u = v with u a unit of A_s and v a unit of A_t", true,
                  {{"free", true},
                   {"basis", {localized_to_json(u.reduced()), localized_to_json(v.reduced())}},
                   {"basis_text", {u.reduced().to_string(), v.reduced().to_string()}},
                   {"sample_coordinates", coords}});
        return rep;
      }
  rep.add("freeness", "omega u = v with u a unit of A_s and v a unit of A_t", Status::Inconclusive,
          {{"free", nullptr}, {"searched", "u = s^i, v = +-t^j, |i|, |j| <= " + std::to_string(bound)}});
  return rep;
}

// -------------------------------------------------------------- kummer

Report f5_kummer_instance(const Common& c) {
  Report rep("f5-kummer");
  ModuleSearch search{c.degree_bound, 1000, c.seed};
  rep.guarded("decomposition", "F_5[x]/(x^4 - 2) = sum_k F_5 x^k", [&] {
    KummerAlgebra k = f5_kummer(search);
    const auto& dec = k.decomposition;
    rep.check("P4", "X^4 - 1 = prod_k (X - 2^k) over F_5", true,
              check_PN(k.action.base(), k.action.base()->constant(2), 4).certificate);
    rep.check("galois-cover", "det rho is a unit", k.cover.galois(), k.cover.to_json());
    Status st = !dec.complete() ? Status::Inconclusive
                                : (dec.isomorphism() && k.monomial_components ? Status::Pass : Status::Fail);
    rep.add("decomposition", "F_5[x]/(x^4 - 2) = sum_k F_5 x^k", st, dec.to_json());
    rep.check("grading", "L_theta L_theta' in L_theta theta'", dec.grading, {{"components", dec.components.size()}});
  });
  return rep;
}

int finish(const Report& rep, const Common& c) {
  std::cout << rep.table();
  if (!c.json_path.empty()) {
    std::ofstream out(c.json_path);
    if (!out) {
      std::cerr << "cannot write " << c.json_path << "\n";
      return 2;
    }
    out << rep.to_json().dump(2) << "\n";
  }
  if (rep.failed()) return 1;
  if (c.strict && rep.inconclusive()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certificates for invertible modules over presented rings"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
    sub->add_option("--degree-bound", c.degree_bound, "degree bound for searches")->capture_default_str();
    sub->add_option("--samples", c.samples, "number of random samples")->capture_default_str();
    sub->add_flag("--strict", c.strict, "inconclusive checks fail the exit code");
    sub->add_option("--json", c.json_path, "write the JSON report here");
  };

  std::function<Report()> run;

  auto* mobius = app.add_subcommand("mobius", "Q^2 = Q, I^2 = (1 + x), squaring map, complex generators");
  add_common(mobius);
  mobius->callback([&] {
    run = [&] {
      MobiusOptions o;
      o.seed = c.seed;
      o.samples = c.samples;
      o.degree_bound = c.degree_bound;
      return mobius_suite(o);
    };
  });

  auto* universal = app.add_subcommand("universal", "non-freeness evidence over the universal ring");
  add_common(universal);
  universal->callback([&] {
    run = [&] {
      UniversalSuiteOptions o;
      o.seed = c.seed;
      if (c.samples_given) o.candidates = c.samples;
      return universal_nonfreeness_suite(o);
    };
  });

  std::string ring_path, gs, gt, gw;
  auto* glue = app.add_subcommand("glue", "gluing along a two-chart cover");
  add_common(glue);
  glue->add_option("--ring", ring_path, "ring JSON file (default Z)");
  glue->add_option("--s", gs, "first chart element");
  glue->add_option("--t", gt, "second chart element");
  glue->add_option("--omega", gw, "gluing unit p/q of A_st");
  glue->callback([&] {
    if (gs.empty() && gt.empty() && gw.empty()) {
      run = [&] {
        GlueSuiteOptions o;
        o.seed = c.seed;
        o.degree = c.degree_bound;
        return glue_suite(o);
      };
    } else {
      if (gs.empty() || gt.empty() || gw.empty()) throw CLI::ValidationError("glue", "--s, --t and --omega go together");
      run = [&] { return glue_instance(ring_path, gs, gt, gw, 4); };
    }
  });

  std::string form_text, form_input;
  auto* qform = app.add_subcommand("qform", "binary quadratic forms, Pell units, automorphisms");
  add_common(qform);
  qform->add_option("--ring", ring_path, "ring JSON file for --form (default Z)");
  qform->add_option("--form", form_text, "a,b,c for aX^2 + 2bXY + cY^2");
  qform->add_option("--input", form_input, "JSON file {\"ring\": ..., \"form\": {\"a\", \"b\", \"c\"}}");
  qform->callback([&] {
    run = [&] {
      QFormSuiteOptions o;
      o.seed = c.seed;
      if (!form_input.empty()) {
        Json j = load_json_file(form_input);
        if (!j.contains("ring") || !j.contains("form")) throw PresentationError(form_input + ": needs ring and form");
        o.form = form_from_json(ring_from_json(j["ring"]), j["form"]);
      } else if (!form_text.empty()) {
        auto p1 = form_text.find(','), p2 = form_text.rfind(',');
        if (p1 == std::string::npos || p1 == p2) throw PresentationError("--form expects a,b,c");
        o.form = BinaryQuadraticForm::parse(ring_or_integers(ring_path), form_text.substr(0, p1),
                                            form_text.substr(p1 + 1, p2 - p1 - 1), form_text.substr(p2 + 1));
      }
      return qform_suite(o);
    };
  });

  std::string action_path, cocycle_path;
  auto* galois = app.add_subcommand("galois", "galois covers, cocycles, Hilbert 90, signatures");
  add_common(galois);
  galois->add_option("--action", action_path, "action JSON file");
  galois->add_option("--cocycle", cocycle_path, "cocycle JSON file {\"g\": \"expr\"}");
  galois->callback([&] {
    run = [&] {
      GaloisSuiteOptions o;
      o.seed = c.seed;
      o.degree_bound = c.degree_bound;
      if (!action_path.empty()) {
        Json j = load_json_file(action_path);
        o.action = action_from_json(j);
        if (j.contains("cocycle")) o.cocycle = j["cocycle"];
      }
      if (!cocycle_path.empty()) {
        if (!o.action) throw PresentationError("--cocycle needs --action");
        o.cocycle = load_json_file(cocycle_path);
      }
      return galois_suite(o);
    };
  });

  std::string kinstance;
  auto* kummer = app.add_subcommand("kummer", "(P_N), characters, Vandermonde, Kummer decomposition");
  add_common(kummer);
  kummer->add_option("--action", action_path, "action JSON file with \"roots\": {\"zeta\", \"N\"}");
  kummer->add_option("--instance", kinstance, "built-in instance")->check(CLI::IsMember({"f5-kummer"}));
  kummer->callback([&] {
    run = [&] {
      if (kinstance == "f5-kummer") return f5_kummer_instance(c);
      KummerSuiteOptions o;
      o.seed = c.seed;
      o.degree_bound = c.degree_bound;
      if (!action_path.empty()) {
        Json j = load_json_file(action_path);
        o.action = action_from_json(j);
        if (j.contains("roots")) o.roots = j["roots"];
      }
      return kummer_suite(o);
    };
  });

  std::string name;
  auto* instance = app.add_subcommand("instance", "run a built-in instance");
  add_common(instance);
  instance->add_option("name", name, "instance name")
      ->required()
      ->check(CLI::IsMember({"mobius", "universal", "f5-kummer", "gauss-qform"}));
  instance->callback([&] {
    run = [&] {
      if (name == "mobius") {
        MobiusOptions o;
        o.seed = c.seed;
        o.samples = c.samples;
        o.degree_bound = c.degree_bound;
        return mobius_suite(o);
      }
      if (name == "universal") {
        UniversalSuiteOptions o;
        o.seed = c.seed;
        return universal_nonfreeness_suite(o);
      }
      if (name == "f5-kummer") return f5_kummer_instance(c);
      QFormSuiteOptions o;
      o.seed = c.seed;
      o.form = BinaryQuadraticForm::parse(integers(), "1", "0", "1");
      return qform_suite(o);
    };
  });

  try {
    app.parse(argc, argv);
    for (auto* sub : app.get_subcommands()) c.samples_given = c.samples_given || sub->count("--samples") > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::optional<Report> rep;
  try {
    rep = run();
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return finish(*rep, c);
}
