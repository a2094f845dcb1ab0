#include "mdisc/cli.hpp"

#include "mdisc/cayley.hpp"
#include "mdisc/corpus.hpp"
#include "mdisc/json_io.hpp"
#include "mdisc/planar.hpp"
#include "mdisc/strata.hpp"
#include "mdisc/tropical.hpp"

#include <json.hpp>

#include <ostream>
#include <sstream>

namespace mdisc {

namespace {

std::string int_str(const Int& v) { return v.str(); }

std::string vec_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

nlohmann::json vec_json(const std::vector<Int>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Int& x : v) arr.push_back(x.str());
  return arr;
}

struct DegreeOutcome {
  std::vector<Int> cycle, reduced;
  Int lattice_index;
  bool defective = false;
  bool degenerate = false;
  std::string method;
};

DegreeOutcome planar_outcome(const CayleySystem& sys) {
  Bidegree b = planar_bidegree(sys.configs[0], sys.configs[1]);
  DegreeOutcome out;
  out.cycle = {b.cycle[0], b.cycle[1]};
  out.reduced = {b.reduced[0], b.reduced[1]};
  out.lattice_index = b.lattice_index;
  out.defective = b.defective;
  out.method = "planar";
  return out;
}

DegreeOutcome tropical_outcome(const CayleySystem& sys, std::uint64_t seed, bool force) {
  TropicalDegree t = tropical_degree(sys, seed, force);
  DegreeOutcome out;
  out.cycle = t.cycle;
  out.reduced = t.reduced;
  out.lattice_index = t.lattice_index;
  out.defective = t.status == TropicalDegree::Status::defective;
  out.degenerate = t.status == TropicalDegree::Status::degenerate;
  out.method = "tropical";
  return out;
}

void print_outcome(const JobSpec& job, const DegreeOutcome& o, const std::string& agreement,
                   std::ostream& out) {
  if (job.output_format == "json") {
    nlohmann::json doc;
    doc["method"] = o.method;
    doc["latticeIndex"] = int_str(o.lattice_index);
    doc["cycle"] = vec_json(o.cycle);
    doc["reduced"] = vec_json(o.reduced);
    doc["defective"] = o.defective;
    doc["degenerate"] = o.degenerate;
    doc["seed"] = job.seed;
    if (!agreement.empty()) doc["agreement"] = agreement;
    out << doc.dump(2) << "\n";
    return;
  }
  out << "method: " << o.method << "\n";
  out << "latticeIndex: " << int_str(o.lattice_index) << "\n";
  out << "cycle degree: " << vec_str(o.cycle) << "\n";
  out << "reduced degree: " << vec_str(o.reduced) << "\n";
  out << "defective: " << (o.defective ? "yes" : "no") << "\n";
  if (o.degenerate) out << "degenerate: yes\n";
  if (!agreement.empty()) out << agreement << "\n";
}

int run_degree(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.inputs.size() != 1) throw InputError("degree expects one input file");
  auto configs = load_configs(job.inputs[0]);
  CayleySystem sys = build_cayley(configs);

  const bool planar_applicable =
      sys.n() == 2 && !sys.degenerate && full_dimensional(configs[0]) &&
      full_dimensional(configs[1]);
  std::string method = job.method;
  if (method == "auto") method = planar_applicable ? "planar" : "tropical";

  if (method == "planar") {
    if (sys.n() != 2) throw InputError("--method planar requires n = 2");
    if (planar_applicable) {
      print_outcome(job, planar_outcome(sys), "", out);
      return 0;
    }
    const bool one_dim_first = affine_dim(configs[0]) == 1 && full_dimensional(configs[1]);
    const bool one_dim_second = affine_dim(configs[1]) == 1 && full_dimensional(configs[0]);
    if (one_dim_first || one_dim_second) {
      OneDimReport rep = one_dim_second ? one_dim_degree(configs[0], configs[1])
                                        : one_dim_degree(configs[1], configs[0]);
      int block = one_dim_second ? 2 : 1;
      out << "method: planar (one-dimensional case)\n";
      out << "degree in block " << block << ": " << rep.delta2.str() << "\n";
      out << "case: " << rep.tag << "\n";
      out << "defective: " << (rep.defective ? "yes" : "no") << "\n";
      out << "note: the other block degree requires --method tropical\n";
      return 0;
    }
    throw InputError("--method planar requires full-dimensional supports");
  }

  if (method == "tropical") {
    print_outcome(job, tropical_outcome(sys, job.seed, job.override_size_gate), "", out);
    return 0;
  }

  if (method == "both") {
    DegreeOutcome trop = tropical_outcome(sys, job.seed, job.override_size_gate);
    if (planar_applicable) {
      DegreeOutcome plan = planar_outcome(sys);
      bool agree = plan.cycle == trop.cycle && plan.lattice_index == trop.lattice_index;
      print_outcome(job, plan, "", out);
      print_outcome(job, trop, agree ? "AGREE" : "DISAGREE", out);
      if (!agree) {
        err << "cross-method disagreement: planar " << vec_str(plan.cycle) << " vs tropical "
            << vec_str(trop.cycle) << "\n";
        return 3;
      }
      return 0;
    }
    if (sys.n() == 2 && !sys.degenerate && full_dimensional(configs[0]) &&
        affine_dim(configs[1]) == 1) {
      OneDimReport rep = one_dim_degree(configs[0], configs[1]);
      bool agree = rep.delta2 == trop.cycle[1];
      print_outcome(job, trop, agree ? "AGREE (block 2 checked against the one-dimensional formula)"
                                      : "DISAGREE",
                    out);
      if (!agree) return 3;
      return 0;
    }
    print_outcome(job, trop, "single-method instance (no planar route)", out);
    return 0;
  }

  throw InputError("unknown method: " + job.method);
}

int run_defect(const JobSpec& job, std::ostream& out, std::ostream&) {
  if (job.inputs.size() != 1) throw InputError("defect expects one input file");
  CayleySystem sys = build_cayley(load_configs(job.inputs[0]));
  DefectVerdict v = is_defective(sys, job.seed, 5, job.override_size_gate);
  if (job.output_format == "json") {
    nlohmann::json doc;
    doc["defective"] = v.defective;
    doc["method"] = v.method;
    doc["certified"] = v.certified;
    out << doc.dump(2) << "\n";
  } else {
    out << "defective: " << (v.defective ? "yes" : "no") << " (method: " << v.method
        << (v.certified ? ", certified" : ", uncertified") << ")\n";
  }
  return 0;
}

int run_stratum(const JobSpec& job, std::ostream& out, std::ostream&) {
  if (job.inputs.size() != 2) throw InputError("stratum compare expects two input files");
  StratumFingerprint a = fingerprint(build_cayley(load_configs(job.inputs[0])));
  StratumFingerprint b = fingerprint(build_cayley(load_configs(job.inputs[1])));
  if (same_stratum(a, b)) {
    out << "SAME-STRATUM\n";
  } else if (a.m != b.m || a.d != b.d) {
    out << "DIFFERENT-STRATUM (different ground sets)\n";
  } else if (a.matroid_id != b.matroid_id) {
    out << "DIFFERENT-STRATUM (different dual matroids)\n";
  } else {
    out << "DIFFERENT-STRATUM (determinant signs differ)\n";
  }
  return 0;
}

int run_fit(const JobSpec& job, std::ostream& out, std::ostream&) {
  if (job.inputs.empty()) throw InputError("fit expects at least one sample file");
  std::vector<std::pair<CayleySystem, std::vector<Int>>> samples;
  for (const auto& path : job.inputs) {
    CayleySystem sys = build_cayley(load_configs(path));
    TropicalDegree t = tropical_degree(sys, job.seed, job.override_size_gate);
    samples.emplace_back(std::move(sys), t.cycle);
  }
  const int block = job.fit_block - 1;
  std::pair<CayleySystem, std::vector<Int>> held;
  bool have_holdout = !job.holdout.empty();
  if (have_holdout) {
    held.first = build_cayley(load_configs(job.holdout));
    held.second = tropical_degree(held.first, job.seed, job.override_size_gate).cycle;
  }
  DegreeFormula f = fit_degree_formula(samples, block, have_holdout ? &held : nullptr);

  size_t nonzero = 0;
  for (const auto& c : f.coeffs)
    if (c != 0) ++nonzero;
  out << "fitted block " << job.fit_block << " on " << samples.size() << " samples\n";
  out << "coefficients: " << nonzero << " nonzero of " << f.coeffs.size()
      << " Plucker coordinates (minimal-norm representative)\n";
  out << "ambiguity: " << f.vanishing_basis.rows() << " independent vanishing forms\n";
  for (const auto& s : samples) {
    Rat v = f.evaluate(plucker(s.first));
    out << "  sample reproduced: degree " << s.second[static_cast<size_t>(block)].str() << "\n";
    (void)v;
  }
  if (have_holdout)
    out << "held-out sample reproduced exactly: degree "
        << held.second[static_cast<size_t>(block)].str() << "\n";
  return 0;
}

int run_examples(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.list_examples) {
    for (const auto& e : corpus()) out << e.name << "  -  " << e.note << "\n";
    return 0;
  }
  if (job.example_name.empty()) throw InputError("examples requires --list or --run NAME");

  std::vector<const CorpusEntry*> todo;
  if (job.example_name == "all") {
    for (const auto& e : corpus()) todo.push_back(&e);
  } else {
    todo.push_back(&corpus_entry(job.example_name));
  }
  int failures = 0;
  for (const CorpusEntry* e : todo) {
    CayleySystem sys = build_cayley(e->configs);
    DegreeOutcome o = tropical_outcome(sys, job.seed, job.override_size_gate);
    bool ok = o.cycle == e->expected_cycle && o.lattice_index == e->expected_index &&
              o.defective == e->expected_defective;
    std::string cross;
    if (sys.n() == 2 && full_dimensional(e->configs[0]) && full_dimensional(e->configs[1])) {
      DegreeOutcome p = planar_outcome(sys);
      ok = ok && p.cycle == e->expected_cycle;
      cross = ", planar agrees";
    }
    if (ok) {
      out << "PASS " << e->name << " cycle=" << vec_str(o.cycle)
          << " i(A)=" << int_str(o.lattice_index)
          << (e->expected_defective ? " defective" : "") << cross << "\n";
    } else {
      ++failures;
      err << "FAIL " << e->name << ": got cycle=" << vec_str(o.cycle)
          << " i(A)=" << int_str(o.lattice_index) << ", expected "
          << vec_str(e->expected_cycle) << " i(A)=" << int_str(e->expected_index) << "\n";
    }
  }
  return failures == 0 ? 0 : 3;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    switch (job.command) {
      case JobSpec::Command::degree: return run_degree(job, out, err);
      case JobSpec::Command::defect: return run_defect(job, out, err);
      case JobSpec::Command::stratum_compare: return run_stratum(job, out, err);
      case JobSpec::Command::fit: return run_fit(job, out, err);
      case JobSpec::Command::examples: return run_examples(job, out, err);
    }
    return 2;
  } catch (const SizeGateError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const GenericityError& e) {
    err << "error: " << e.what() << "\n";
    return 5;
  } catch (const StratumFitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace mdisc
