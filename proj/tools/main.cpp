// Command-line front end: computes the inverse along an element (four
// routes), the classical generalized inverses it subsumes, ring censuses,
// and theorem-catalog verifications, in text or JSON.
//
// Exit codes: 0 computed result / all checks pass; 1 the requested inverse
// does not exist or a checked statement fails; 2 usage error (bad ring,
// element, or flag); 3 internal invariant violation.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringinv/along.hpp"
#include "ringinv/geninv.hpp"
#include "ringinv/ring.hpp"
#include "ringinv/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using ringinv::Element;
using ringinv::RingPtr;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void emit(const json& doc, const std::string& format, const std::vector<std::string>& text) {
  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    for (const auto& line : text) std::cout << line << "\n";
  }
}

ringinv::AlongRoute route_from(const std::string& name) {
  if (name == "definitional") return ringinv::AlongRoute::Definitional;
  if (name == "corner") return ringinv::AlongRoute::Corner;
  if (name == "unit") return ringinv::AlongRoute::UnitFormula;
  return ringinv::AlongRoute::InnerDxd;
}

int run_inverse_along(const std::string& ring_spec, const std::string& a_str,
                      const std::string& d_str, const std::string& route,
                      const std::string& dbar_str, const std::string& format) {
  Timer timer;
  RingPtr ring = ringinv::make_ring(ring_spec);
  Element a = ring->parse(a_str), d = ring->parse(d_str);
  std::optional<Element> dbar;
  if (!dbar_str.empty()) dbar = ring->parse(dbar_str);

  json doc;
  doc["ring"] = ring->spec();
  doc["a"] = a.str();
  doc["d"] = d.str();
  doc["route"] = route;
  try {
    auto res = ringinv::inverse_along(a, d, route_from(route), dbar);
    if (!res) throw ringinv::NonExistence("a is not invertible along d");
    doc["result"] = res->inverse.str();
    json w;
    for (const auto& [name, el] : res->witnesses) w[name] = el.str();
    doc["witnesses"] = w;
    doc["elapsed_ms"] = timer.ms();
    std::vector<std::string> text{"a^{along d} = " + res->inverse.str() + "   (route " + route +
                                  ")"};
    for (const auto& [name, el] : res->witnesses) text.push_back("  " + name + " = " + el.str());
    emit(doc, format, text);
    return 0;
  } catch (const ringinv::NonExistence& e) {
    doc["result"] = nullptr;
    doc["reason"] = e.what();
    doc["elapsed_ms"] = timer.ms();
    emit(doc, format, {std::string("does not exist: ") + e.what()});
    return 1;
  }
}

int run_group(const std::string& ring_spec, const std::string& a_str,
              const std::string& format) {
  Timer timer;
  RingPtr ring = ringinv::make_ring(ring_spec);
  Element a = ring->parse(a_str);
  json doc;
  doc["ring"] = ring->spec();
  doc["a"] = a.str();
  auto res = ringinv::group_inverse(a);
  if (!res) {
    doc["result"] = nullptr;
    doc["reason"] = "a is not group invertible";
    doc["elapsed_ms"] = timer.ms();
    emit(doc, format, {"does not exist: a is not group invertible"});
    return 1;
  }
  doc["result"] = res->inverse.str();
  doc["spectral_idempotent"] = res->spectral_idempotent.str();
  doc["elapsed_ms"] = timer.ms();
  emit(doc, format,
       {"a# = " + res->inverse.str(), "p_a = " + res->spectral_idempotent.str()});
  return 0;
}

int run_drazin(const std::string& ring_spec, const std::string& a_str,
               const std::string& format) {
  Timer timer;
  RingPtr ring = ringinv::make_ring(ring_spec);
  Element a = ring->parse(a_str);
  json doc;
  doc["ring"] = ring->spec();
  doc["a"] = a.str();
  auto res = ringinv::drazin_inverse(a);
  if (!res) {
    doc["result"] = nullptr;
    doc["reason"] = "a is not Drazin invertible";
    doc["elapsed_ms"] = timer.ms();
    emit(doc, format, {"does not exist: a is not Drazin invertible"});
    return 1;
  }
  doc["result"] = res->inverse.str();
  doc["index"] = res->index;
  doc["classical_index"] = res->classical_index;
  doc["spectral_idempotent"] = res->spectral_idempotent.str();
  doc["elapsed_ms"] = timer.ms();
  emit(doc, format,
       {"a^d = " + res->inverse.str(),
        "index = " + std::to_string(res->index) + " (classical: " +
            std::to_string(res->classical_index) + ")",
        "a^pi = " + res->spectral_idempotent.str()});
  return 0;
}

int run_gdrazin(const std::string& ring_spec, const std::string& a_str,
                const std::string& format) {
  Timer timer;
  RingPtr ring = ringinv::make_ring(ring_spec);
  Element a = ring->parse(a_str);
  json doc;
  doc["ring"] = ring->spec();
  doc["a"] = a.str();
  auto res = ringinv::generalized_drazin_inverse(a);
  if (!res) {
    doc["result"] = nullptr;
    doc["reason"] = "a is not generalized Drazin invertible";
    doc["elapsed_ms"] = timer.ms();
    emit(doc, format, {"does not exist: a is not generalized Drazin invertible"});
    return 1;
  }
  doc["result"] = res->inverse.str();
  doc["spectral_idempotent"] = res->spectral_idempotent.str();
  doc["elapsed_ms"] = timer.ms();
  emit(doc, format,
       {"a^D = " + res->inverse.str(), "a^pi = " + res->spectral_idempotent.str()});
  return 0;
}

int run_mp(const std::string& ring_spec, const std::string& a_str, const std::string& format) {
  Timer timer;
  RingPtr ring = ringinv::make_ring(ring_spec);
  Element a = ring->parse(a_str);
  json doc;
  doc["ring"] = ring->spec();
  doc["a"] = a.str();
  auto res = ringinv::mp_inverse(a);
  if (!res) {
    doc["result"] = nullptr;
    doc["reason"] = "a is not Moore-Penrose invertible";
    doc["elapsed_ms"] = timer.ms();
    emit(doc, format, {"does not exist: a is not Moore-Penrose invertible"});
    return 1;
  }
  bool ep = ringinv::is_ep(a);
  doc["result"] = res->inverse.str();
  doc["ep"] = ep;
  doc["elapsed_ms"] = timer.ms();
  emit(doc, format,
       {"a+ = " + res->inverse.str(), std::string("EP: ") + (ep ? "yes" : "no")});
  return 0;
}

int run_classify(const std::string& ring_spec, const std::string& a_str,
                 const std::string& format) {
  Timer timer;
  RingPtr ring = ringinv::make_ring(ring_spec);
  Element a = ring->parse(a_str);
  json doc;
  doc["ring"] = ring->spec();
  doc["a"] = a.str();
  std::vector<std::string> text;

  doc["regular"] = ringinv::is_regular(a);
  text.push_back(std::string("regular:          ") + (ringinv::is_regular(a) ? "yes" : "no"));

  auto u = ringinv::unit_inverse(a);
  doc["unit"] = u.has_value();
  doc["unit_inverse"] = u ? json(u->str()) : json(nullptr);
  text.push_back(u ? "unit:             yes, a^{-1} = " + u->str() : "unit:             no");

  doc["idempotent"] = ringinv::is_idempotent(a);
  text.push_back(std::string("idempotent:       ") +
                 (ringinv::is_idempotent(a) ? "yes" : "no"));

  auto g = ringinv::group_inverse(a);
  doc["group_invertible"] = g.has_value();
  doc["group_inverse"] = g ? json(g->inverse.str()) : json(nullptr);
  doc["spectral_idempotent"] = g ? json(g->spectral_idempotent.str()) : json(nullptr);
  text.push_back(g ? "group invertible: yes, a# = " + g->inverse.str() +
                         ", p_a = " + g->spectral_idempotent.str()
                   : "group invertible: no");

  auto dz = ringinv::drazin_inverse(a);
  doc["drazin_inverse"] = dz ? json(dz->inverse.str()) : json(nullptr);
  doc["drazin_index"] = dz ? json(dz->index) : json(nullptr);
  text.push_back(dz ? "Drazin:           a^d = " + dz->inverse.str() +
                          ", index " + std::to_string(dz->index)
                    : "Drazin:           none");

  if (ring->enumerable()) {
    bool q = ringinv::is_quasinilpotent(a);
    doc["quasinilpotent"] = q;
    text.push_back(std::string("quasinilpotent:   ") + (q ? "yes" : "no"));
  } else {
    doc["quasinilpotent"] = nullptr;
    text.push_back("quasinilpotent:   not decided (ring not enumerable)");
  }

  auto m = ringinv::mp_inverse(a);
  doc["mp_invertible"] = m.has_value();
  doc["mp_inverse"] = m ? json(m->inverse.str()) : json(nullptr);
  doc["ep"] = m ? json(ringinv::is_ep(a)) : json(nullptr);
  text.push_back(m ? "Moore-Penrose:    a+ = " + m->inverse.str() +
                         (ringinv::is_ep(a) ? " (EP)" : " (not EP)")
                   : "Moore-Penrose:    none");

  doc["elapsed_ms"] = timer.ms();
  emit(doc, format, text);
  return 0;
}

int run_census(const std::string& ring_spec, bool parallel, const std::string& format) {
  Timer timer;
  RingPtr ring = ringinv::make_ring(ring_spec);
  ringinv::VerifyOptions opts;
  opts.parallel = parallel;
  ringinv::CensusReport rep = ringinv::census(ring, opts);
  json doc = ringinv::to_json(rep);
  doc["elapsed_ms"] = timer.ms();
  std::vector<std::string> text{
      "ring:              " + rep.ring,
      "size:              " + std::to_string(rep.size),
      "units:             " + std::to_string(rep.units),
      "idempotents:       " + std::to_string(rep.idempotents),
      "regular:           " + std::to_string(rep.regular),
      "group invertible:  " + std::to_string(rep.group_invertible),
      "quasinilpotent:    " + std::to_string(rep.quasinilpotent),
      "MP invertible:     " + std::to_string(rep.mp_invertible),
      "EP:                " + std::to_string(rep.ep),
  };
  std::string hist = "Drazin index histogram: ";
  for (const auto& [k, v] : rep.drazin_index_histogram)
    hist += std::to_string(k) + ":" + std::to_string(v) + " ";
  text.push_back(hist);
  text.push_back("along-set sizes over regular d:");
  for (const auto& [d, v] : rep.along_set_sizes)
    text.push_back("  |R^{along " + d + "}| = " + std::to_string(v));
  emit(doc, format, text);
  return 0;
}

int run_verify(const std::string& ring_spec, const std::string& theorem_id,
               std::uint64_t seed, bool parallel, const std::string& format) {
  RingPtr ring = ringinv::make_ring(ring_spec);
  ringinv::VerifyOptions opts;
  opts.seed = seed;
  opts.parallel = parallel;

  std::vector<ringinv::TheoremReport> reports;
  if (!theorem_id.empty()) {
    reports.push_back(ringinv::verify_theorem(ring, theorem_id, opts));
  } else {
    reports = ringinv::verify_all(ring, opts);
  }

  bool any_fail = false;
  std::vector<std::string> text;
  for (const auto& rep : reports) {
    if (rep.status == ringinv::VerifyStatus::Fail) any_fail = true;
    char line[256];
    std::snprintf(line, sizeof(line), "%-10s %-14s %8llu instances  %8.1f ms",
                  rep.theorem_id.c_str(), ringinv::status_name(rep.status),
                  static_cast<unsigned long long>(rep.instances_checked), rep.elapsed_ms);
    text.push_back(line);
    if (!rep.note.empty()) text.push_back("           note: " + rep.note);
    for (const auto& f : rep.failures) {
      std::string w = "           counterexample:";
      for (const auto& [name, lit] : f.bindings) w += " " + name + "=" + lit;
      text.push_back(w);
      text.push_back("             " + f.detail);
    }
  }
  json doc = (reports.size() == 1 && !theorem_id.empty()) ? ringinv::to_json(reports.front())
                                                          : ringinv::to_json(reports);
  emit(doc, format, text);
  return any_fail ? 1 : 0;
}

int run_decompose(const std::string& ring_spec, const std::string& a_str,
                  const std::string& d_str, const std::string& flavor,
                  const std::string& dbar_str, const std::string& format) {
  Timer timer;
  RingPtr ring = ringinv::make_ring(ring_spec);
  Element a = ring->parse(a_str), d = ring->parse(d_str);
  std::optional<Element> dbar;
  if (!dbar_str.empty()) dbar = ring->parse(dbar_str);
  ringinv::DecompFlavor fl = flavor == "left"    ? ringinv::DecompFlavor::Left
                             : flavor == "right" ? ringinv::DecompFlavor::Right
                                                 : ringinv::DecompFlavor::Idempotent;
  json doc;
  doc["ring"] = ring->spec();
  doc["a"] = a.str();
  doc["d"] = d.str();
  doc["flavor"] = flavor;
  try {
    if (!dbar) {
      if (fl == ringinv::DecompFlavor::Idempotent) {
        dbar = d;
      } else {
        dbar = ringinv::any_inner_inverse(d);
        if (!dbar) throw ringinv::NonExistence("d is not regular");
      }
    }
    doc["dbar"] = dbar->str();
    auto res = ringinv::decompose_along(a, d, *dbar, fl);
    if (!res) throw ringinv::NonExistence("a is not invertible along d");
    doc["s"] = res->s.str();
    doc["t"] = res->t.str();
    doc["along_inverse"] = res->along_inverse.str();
    doc["elapsed_ms"] = timer.ms();
    emit(doc, format,
         std::vector<std::string>{"s = " + res->s.str(), "t = " + res->t.str(),
                                  "a^{along d} = " + res->along_inverse.str()});
    return 0;
  } catch (const ringinv::NonExistence& e) {
    doc["result"] = nullptr;
    doc["reason"] = e.what();
    doc["elapsed_ms"] = timer.ms();
    emit(doc, format, std::vector<std::string>{std::string("does not exist: ") + e.what()});
    return 1;
  }
}

int run_set_along(const std::string& ring_spec, const std::string& d_str,
                  const std::string& format) {
  Timer timer;
  RingPtr ring = ringinv::make_ring(ring_spec);
  Element d = ring->parse(d_str);
  auto members = ringinv::invertibles_along(d);
  json doc;
  doc["ring"] = ring->spec();
  doc["d"] = d.str();
  doc["count"] = members.size();
  json arr = json::array();
  std::vector<std::string> text{"|R^{along d}| = " + std::to_string(members.size())};
  for (const Element& m : members) {
    auto res = ringinv::inverse_along(m, d, ringinv::AlongRoute::Corner);
    if (!res) throw std::logic_error("internal invariant violated: member lost its inverse");
    arr.push_back(json{{"a", m.str()}, {"inverse", res->inverse.str()}});
    text.push_back("  " + m.str() + "  ->  " + res->inverse.str());
  }
  doc["members"] = arr;
  doc["elapsed_ms"] = timer.ms();
  emit(doc, format, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact inverses along an element in unital rings (modular and matrix rings), "
               "classical generalized inverses, censuses, and theorem verification"};
  app.require_subcommand(1);

  int rc = 0;
  std::string ring_spec, format = "text";
  std::string a_str, d_str, dbar_str, route = "corner", theorem_id, flavor = "left";
  std::uint64_t seed = 0;
  bool parallel = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--ring", ring_spec,
                    "ring specification: zmod:<n>, mat:<k>:z<p>, or mat:<k>:q")
        ->required();
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  CLI::App* inv = app.add_subcommand(
      "inverse-along", "compute a^{along d}, the unique outer inverse of a with bR = dR and "
                       "Rb = Rd");
  add_common(inv);
  inv->add_option("a", a_str, "element literal")->required();
  inv->add_option("d", d_str, "element literal")->required();
  inv->add_option("--route", route, "computation route")
      ->check(CLI::IsMember({"definitional", "corner", "unit", "dxd"}))
      ->capture_default_str();
  inv->add_option("--dbar", dbar_str, "inner inverse of d to use as witness");
  inv->callback([&] { rc = run_inverse_along(ring_spec, a_str, d_str, route, dbar_str, format); });

  CLI::App* grp = app.add_subcommand("group", "compute the group inverse a#");
  add_common(grp);
  grp->add_option("a", a_str, "element literal")->required();
  grp->callback([&] { rc = run_group(ring_spec, a_str, format); });

  CLI::App* drz = app.add_subcommand("drazin", "compute the Drazin inverse a^d and its index");
  add_common(drz);
  drz->add_option("a", a_str, "element literal")->required();
  drz->callback([&] { rc = run_drazin(ring_spec, a_str, format); });

  CLI::App* gdz = app.add_subcommand(
      "gdrazin", "compute the generalized Drazin inverse a^D (enumerable rings)");
  add_common(gdz);
  gdz->add_option("a", a_str, "element literal")->required();
  gdz->callback([&] { rc = run_gdrazin(ring_spec, a_str, format); });

  CLI::App* mp = app.add_subcommand("mp", "compute the Moore-Penrose inverse a+ (involution: "
                                          "identity on modular rings, transpose on matrices)");
  add_common(mp);
  mp->add_option("a", a_str, "element literal")->required();
  mp->callback([&] { rc = run_mp(ring_spec, a_str, format); });

  CLI::App* cls = app.add_subcommand(
      "classify", "report which inverses an element admits (regular/unit/idempotent/group/"
                  "Drazin/quasinilpotent/Moore-Penrose/EP)");
  add_common(cls);
  cls->add_option("a", a_str, "element literal")->required();
  cls->callback([&] { rc = run_classify(ring_spec, a_str, format); });

  CLI::App* cen = app.add_subcommand(
      "census", "count units, idempotents, regular/group/MP invertible elements, Drazin "
                "indices and along-set sizes over an enumerable ring");
  add_common(cen);
  cen->add_flag("--parallel", parallel, "parallelize the sweep");
  cen->callback([&] { rc = run_census(ring_spec, parallel, format); });

  CLI::App* ver = app.add_subcommand(
      "verify", "check the theorem catalog (or one entry) by sweeping an enumerable ring");
  add_common(ver);
  ver->add_option("--theorem", theorem_id, "catalog id (e.g. THM8); default: all entries");
  ver->add_option("--seed", seed, "seed for sampled strata in budgeted sweeps")
      ->capture_default_str();
  ver->add_flag("--parallel", parallel, "parallelize the sweeps");
  ver->callback([&] { rc = run_verify(ring_spec, theorem_id, seed, parallel, format); });

  CLI::App* dec = app.add_subcommand(
      "decompose", "split a into the unique pair (s, t) characterizing invertibility along d");
  add_common(dec);
  dec->add_option("a", a_str, "element literal")->required();
  dec->add_option("d", d_str, "element literal")->required();
  dec->add_option("--flavor", flavor, "decomposition form: a = dbar s + t (left), "
                                      "a = u dbar + v (right), a = s + t (idempotent)")
      ->check(CLI::IsMember({"left", "right", "idempotent"}))
      ->capture_default_str();
  dec->add_option("--dbar", dbar_str, "inner inverse of d to use as witness");
  dec->callback([&] { rc = run_decompose(ring_spec, a_str, d_str, flavor, dbar_str, format); });

  CLI::App* set = app.add_subcommand(
      "set-along", "list every element invertible along d with its inverse (enumerable rings)");
  add_common(set);
  set->add_option("d", d_str, "element literal")->required();
  set->callback([&] { rc = run_set_along(ring_spec, d_str, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ringinv::RingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ringinv::NonExistence& e) {
    std::cout << "does not exist: " << e.what() << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
