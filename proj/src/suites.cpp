#include "ctc/suites.hpp"

#include <chrono>
#include <functional>
#include <set>

#include "ctc/json_io.hpp"
#include "ctc/parallel.hpp"

namespace ctc {

namespace {

/// Runs `fn`, timing it; a thrown Error becomes an error item named `check`.
void guarded(Report& r, const std::string& check, const std::function<void(Report&)>& fn) {
  const auto start = std::chrono::steady_clock::now();
  Report local;
  try {
    fn(local);
  } catch (const Error& e) {
    local.add(check, Status::error, nullptr, e.what());
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!local.items.empty()) local.items.back().elapsed_ms = ms;
  r.append(local);
}

struct Instance {
  AlgebraPtr alg;
  nlohmann::json spec;
  std::vector<AModule> modules;
};

Scalar expected_index(const Instance& in) { return parse_literal(in.spec.at("index"), in.alg->field(), "index"); }

void check_index(Report& r, const Instance& in) {
  guarded(r, "index", [&](Report& out) {
    const Scalar idx = compute_index(*in.alg);
    out.expect("index", idx == expected_index(in), idx.to_string());
  });
  guarded(r, "frobenius-identity", [&](Report& out) {
    const Report f = frobenius_identity_check(*in.alg);
    out.expect("frobenius-identity", f.all_pass());
  });
}

void check_dim_with_twist(Report& r, const Instance& in) {
  guarded(r, "dim-with-twist", [&](Report& out) {
    const Scalar d = algebra_dim_with_twist(*in.alg);
    out.expect("dim-with-twist", d == compute_index(*in.alg), d.to_string());
  });
}

std::vector<Mor> surjection_candidates(const AModule& m1, const AModule& m2) {
  const auto basis = hom_A(m1, m2);
  std::vector<Mor> out;
  if (basis.empty()) return out;
  Mor sum = Mor::zero(m1.X, m2.X);
  for (const auto& f : basis) {
    if (is_surjective(f)) out.push_back(f);
    sum = sum + f;
  }
  if (is_surjective(sum)) out.push_back(sum);
  return out;
}

void maschke_instance(Report& r, const Instance& in) {
  check_index(r, in);
  for (const auto& m : in.modules) {
    guarded(r, "module:" + m.name, [&](Report& out) { out.expect("module:" + m.name, check_module(m).all_pass()); });
    guarded(r, "semisimple:" + m.name, [&](Report& out) {
      const auto ss = is_semisimple_module(m);
      out.expect("semisimple:" + m.name, ss.semisimple, ss.certificate());
    });
  }
  for (const auto& m1 : in.modules)
    for (const auto& m2 : in.modules) {
      const std::string name = "split:" + m1.name + "->" + m2.name;
      guarded(r, name, [&](Report& out) {
        const auto candidates = surjection_candidates(m1, m2);
        if (candidates.empty()) return;
        std::size_t bad = 0;
        nlohmann::json first_bad;
        for (const auto& f : candidates) {
          const auto s = maschke_section(f, m1, m2);
          if (s.module_map && s.splits) continue;
          if (bad++ == 0) first_bad = {{"f", to_json(f)}, {"s", to_json(s.s)}};
        }
        nlohmann::json w = {{"surjections", candidates.size()}};
        if (bad) w["failures"] = bad, w["first"] = first_bad;
        out.expect(name, bad == 0, w);
      });
    }
}

void counterexample_instance(Report& r, const Instance& in) {
  check_index(r, in);
  for (const auto& m : in.modules)
    guarded(r, "not-semisimple:" + m.name, [&](Report& out) {
      const auto ss = is_semisimple_module(m);
      out.expect("not-semisimple:" + m.name, !ss.semisimple && !ss.radical_vector.is_null(), ss.certificate());
    });
  // Maschke averaging must refuse: the index vanishes.
  for (const auto& m1 : in.modules)
    for (const auto& m2 : in.modules) {
      if (&m1 == &m2) continue;
      const std::string name = "index-zero:" + m1.name + "->" + m2.name;
      guarded(r, name, [&](Report& out) {
        const auto candidates = surjection_candidates(m1, m2);
        if (candidates.empty()) return;
        try {
          maschke_section(candidates.front(), m1, m2);
          out.expect(name, false, nullptr, "maschke_section returned a section");
        } catch (const Error& e) {
          out.expect(name, e.code() == ErrorCode::IndexZero, nullptr, e.what());
        }
      });
    }
}

void local_instance(Report& r, const Instance& in) {
  guarded(r, "commutative", [&](Report& out) { out.expect("commutative", is_commutative(*in.alg)); });
  check_index(r, in);
  check_dim_with_twist(r, in);
  std::set<std::string> zero;
  for (const auto& z : in.spec.value("projector_zero", std::vector<std::string>{})) zero.insert(z);
  std::vector<Mor> pis(in.modules.size());
  for (std::size_t k = 0; k < in.modules.size(); ++k) {
    const AModule& m = in.modules[k];
    guarded(r, "module:" + m.name, [&](Report& out) { out.expect("module:" + m.name, check_module(m).all_pass()); });
    guarded(r, "pi:" + m.name, [&](Report& out) {
      const Mor pi = projector_pi(m);
      pis[k] = pi;
      out.expect("pi-idempotent:" + m.name, compose(pi, pi) == pi);
      out.expect("pi-module-map:" + m.name, is_module_morphism(pi, m, m));
      if (is_local(m).holds) {
        out.expect("pi-identity:" + m.name, pi == Mor::identity(m.X));
        const auto ss = is_semisimple_module(m);
        out.expect("local-semisimple:" + m.name, ss.semisimple, ss.certificate());
      }
      if (zero.count(m.name)) out.expect("pi-zero:" + m.name, pi.is_zero());
      const auto lp = local_projection(m);
      out.expect("pi-image-local:" + m.name,
                 check_module(lp.module).all_pass() && is_local(lp.module).holds &&
                     compose(lp.u, lp.pi_prime) == pi && compose(lp.pi_prime, lp.u) == Mor::identity(lp.module.X),
                 lp.module.X.to_string());
    });
  }
  for (std::size_t i = 0; i < in.modules.size(); ++i)
    for (std::size_t j = 0; j < in.modules.size(); ++j) {
      const std::string name = "pi-natural:" + in.modules[i].name + "->" + in.modules[j].name;
      guarded(r, name, [&](Report& out) {
        if (pis[i].blocks().empty() || pis[j].blocks().empty()) return;
        const auto basis = hom_A(in.modules[i], in.modules[j]);
        std::size_t bad = 0;
        for (const auto& f : basis) bad += compose(pis[j], f) != compose(f, pis[i]);
        out.expect(name, bad == 0, {{"hom_dim", basis.size()}, {"failures", bad}});
      });
    }
  guarded(r, "condense", [&](Report& out) {
    const auto c = condense(in.alg);
    out.append(c.report, "condense/");
    const auto expected = in.spec.at("simple_local_modules").get<std::size_t>();
    for (const auto& s : c.simples)
      out.expect("pi-identity:" + s.module.name, projector_pi(s.module) == Mor::identity(s.module.X));
    out.expect("simple-local-count", c.simples.size() == expected,
               {{"found", c.simples.size()}, {"expected", expected}});
  });
}

Report run_instance(const std::string& kind, const nlohmann::json& spec, const std::filesystem::path& base) {
  Report r;
  Instance in;
  in.spec = spec;
  guarded(r, "load", [&](Report&) {
    in.alg = load_algebra(base / spec.at("algebra").get<std::string>());
    for (const auto& m : spec.value("modules", std::vector<std::string>{}))
      in.modules.push_back(resolve_module(in.alg, m, base));
  });
  if (!r.all_pass()) return r;
  if (kind == "maschke")
    maschke_instance(r, in);
  else if (kind == "counterexamples")
    counterexample_instance(r, in);
  else if (kind == "local")
    local_instance(r, in);
  else
    r.add("kind", Status::error, nullptr, "unknown suite kind '" + kind + "'");
  return r;
}

}  // namespace

Report run_suite(const std::filesystem::path& manifest, std::size_t jobs) {
  const auto doc = read_json(manifest);
  std::string kind, name;
  std::vector<nlohmann::json> instances;
  try {
    kind = doc.at("kind").get<std::string>();
    name = doc.value("name", manifest.stem().string());
    instances = doc.at("instances").get<std::vector<nlohmann::json>>();
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, manifest.string() + ": " + e.what());
  }
  const auto base = manifest.parent_path();
  const auto parts = parallel_map<Report>(instances.size(), jobs, [&](std::size_t i) {
    try {
      return run_instance(kind, instances[i], base);
    } catch (const nlohmann::json::exception& e) {
      Report r;
      r.add("manifest", Status::error, nullptr, manifest.string() + ": " + e.what());
      return r;
    }
  });
  Report out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.append(parts[i], name + "/" + instances[i].at("algebra").get<std::string>() + "/");
  return out;
}

Report theorem_suite(const std::string& name, const std::filesystem::path& data_dir, std::size_t jobs) {
  if (name == "all") {
    Report out;
    for (const char* s : {"maschke_2_6", "counterexamples", "local_3_1"}) out.append(theorem_suite(s, data_dir, jobs));
    return out;
  }
  if (name != "maschke_2_6" && name != "counterexamples" && name != "local_3_1")
    raise(ErrorCode::InvalidArgument, "unknown suite '" + name + "'");
  return run_suite(data_dir / "suites" / (name + ".json"), jobs);
}

Report algebra_report(const AlgebraObject& alg) {
  Report r = check_algebra(alg);
  guarded(r, "frobenius-identity", [&](Report& out) { out.append(frobenius_identity_check(alg), "frobenius/"); });
  if (alg.coev && is_commutative(alg))
    guarded(r, "dim-with-twist", [&](Report& out) {
      const Scalar d = algebra_dim_with_twist(alg);
      out.add("dim-with-twist", Status::pass, d.to_string());
    });
  return r;
}

Report module_report(const AModule& m) {
  Report r = check_module(m);
  if (!r.all_pass()) return r;
  if (is_commutative(*m.alg)) {
    const auto loc = is_local(m);
    r.add("local", Status::pass, loc.holds);
  }
  guarded(r, "semisimple", [&](Report& out) {
    const auto ss = is_semisimple_module(m);
    out.add("semisimple", Status::pass, ss.certificate());
  });
  return r;
}

}  // namespace ctc
