#include "hodgerec/verify.hpp"

#include "hodgerec/golden.hpp"
#include "hodgerec/oracles.hpp"
#include "hodgerec/polybasis.hpp"
#include "hodgerec/series.hpp"

namespace hodgerec::verify {

namespace {

std::string exps_text(const std::vector<int>& exps) {
  std::string s = "(";
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(exps[j]);
  }
  return s + ")";
}

}  // namespace

SuiteResult run_golden(Engine& engine) {
  SuiteResult r{"golden", 0, {}, {}};
  for (const auto& entry : golden::reference_values()) {
    ++r.checks_run;
    Rational got = engine.eval(entry.key);
    if (got != entry.value)
      r.failures.push_back({entry.key.describe(),
                            "expected " + to_string(entry.value) + ", got " +
                                to_string(got) + " [" + entry.source + "]"});
  }
  return r;
}

SuiteResult run_closed_forms(Engine& engine, int g_max) {
  SuiteResult r{"closed-forms", 0, {}, {}};
  for (Kind kind : {Kind::TwistedD, Kind::UntwistedD}) {
    for (int g = 0; g <= g_max; ++g) {
      for (int i = 0; i <= g; ++i) {
        ++r.checks_run;
        MultiIndex index = MultiIndex::canonicalize({i});
        Rational expected = oracles::one_lambda_closed_form(kind, g, i);
        Rational got = engine.eval(kind, g, index);
        if (got != expected)
          r.failures.push_back(
              {std::string(1, kind_char(kind)) + "(g=" + std::to_string(g) +
                   "; " + index.text() + ") vs elementary-symmetric form",
               "expected " + to_string(expected) + ", got " + to_string(got)});
      }
    }
  }
  for (int g = 1; g <= g_max; ++g) {
    ++r.checks_run;
    Rational expected = oracles::faber_pandharipande(g);
    Rational got =
        engine.eval(Kind::TwistedD, g, MultiIndex::canonicalize({g - 1, g}));
    if (got != expected)
      r.failures.push_back(
          {"D(g=" + std::to_string(g) + "; " +
               MultiIndex::canonicalize({g - 1, g}).text() +
               ") vs Bernoulli form",
           "expected " + to_string(expected) + ", got " + to_string(got)});
  }
  return r;
}

SuiteResult run_k_independence(Engine& engine, int g_max, int weight_max) {
  SuiteResult r{"k-independence", 0, {}, {}};
  for (int g = 1; g <= g_max; ++g) {
    for (const MultiIndex& index :
         canonical_indices(std::min(weight_max, 2 * g - 1), g)) {
      const int w = index.weight();
      if (w <= 2 * g - 2) {
        const Rational base = engine.nph_D(g, index, 0);
        for (int k = 1; k <= 2 * g - 2 - w; ++k) {
          ++r.checks_run;
          Rational got = engine.nph_D(g, index, k);
          if (got != base)
            r.failures.push_back(
                {"nph_D(g=" + std::to_string(g) + "; " + index.text() +
                     "; k=" + std::to_string(k) + ")",
                 "k=0 gives " + to_string(base) + ", got " + to_string(got)});
        }
      }
      if (w <= 2 * g - 1) {
        const Rational base = engine.nph_d(g, index, 0);
        for (int k = 1; k <= 2 * g - 1 - w; ++k) {
          ++r.checks_run;
          Rational got = engine.nph_d(g, index, k);
          if (got != base)
            r.failures.push_back(
                {"nph_d(g=" + std::to_string(g) + "; " + index.text() +
                     "; k=" + std::to_string(k) + ")",
                 "k=0 gives " + to_string(base) + ", got " + to_string(got)});
        }
      }
    }
  }
  return r;
}

SuiteResult run_pde(Engine& engine, int t_order, int weight_cap,
                    int slots_max) {
  SuiteResult r{"pde", 0, {}, {}};
  for (int slots = 1; slots <= slots_max; ++slots) {
    ++r.checks_run;
    PdeReport report = verify_pde(engine, slots, t_order, weight_cap);
    for (int eq : {1, 2}) {
      const auto& cells = eq == 1 ? report.eq1_mismatches : report.eq2_mismatches;
      for (const PdeCell& cell : cells)
        r.failures.push_back(
            {"pde eq" + std::to_string(eq) + " slots=" + std::to_string(slots) +
                 " cell s^" + exps_text(cell.exps) + " t^" +
                 std::to_string(cell.tpow),
             "lhs " + to_string(cell.lhs) + " != rhs " + to_string(cell.rhs)});
    }
  }
  return r;
}

SuiteResult run_identity(int n_max) {
  SuiteResult r{"identity", 0, {}, {}};
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      ++r.checks_run;
      if (!oracles::combinatorial_identity_check(n, k))
        r.failures.push_back({"identity(n=" + std::to_string(n) +
                                  ", k=" + std::to_string(k) + ")",
                              "signed convolution does not match"});
    }
  }
  return r;
}

SuiteResult run_polynomial_extrapolation(Engine& engine, int weight_max) {
  SuiteResult r{"polynomial-extrapolation", 0, {}, {}};
  for (Kind kind : {Kind::TwistedD, Kind::UntwistedD}) {
    for (const MultiIndex& index : canonical_indices(weight_max, weight_max)) {
      BinomialPolynomial p = extract(engine, kind, index);
      const int bound = p.degree_bound();
      for (int g = bound + 1; g <= bound + 2; ++g) {
        ++r.checks_run;
        Int predicted = evaluate(p, g);
        Int actual = engine.normalized_integer(kind, g, index);
        if (predicted != actual)
          r.failures.push_back(
              {std::string(1, kind_char(kind)) + " index=" + index.text() +
                   " extrapolated to g=" + std::to_string(g),
               "polynomial gives " + predicted.get_str() + ", engine gives " +
                   actual.get_str()});
      }
      DegreeReport deg = degree_report(p);
      if (!deg.conjectured_degree_match)
        r.notes.push_back(std::string(1, kind_char(kind)) + " index=" +
                          index.text() + ": observed degree " +
                          std::to_string(deg.observed) + " != 2|i| = " +
                          std::to_string(2 * index.weight()));
    }
  }
  return r;
}

}  // namespace hodgerec::verify
