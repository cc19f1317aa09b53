#include "hodgerec/conjectures.hpp"

#include <stdexcept>

#include "hodgerec/oracles.hpp"
#include "hodgerec/polybasis.hpp"

namespace hodgerec::conjectures {

const char* status_text(FindingStatus s) {
  switch (s) {
    case FindingStatus::holds: return "holds";
    case FindingStatus::violated: return "violated";
    case FindingStatus::vacuous: return "vacuous";
  }
  return "?";
}

LogConcavity check_log_concavity(const std::vector<Int>& seq) {
  int first = -1, last = -1;
  for (int k = 0; k < static_cast<int>(seq.size()); ++k) {
    if (seq[static_cast<std::size_t>(k)] != 0) {
      if (first < 0) first = k;
      last = k;
    }
  }
  if (first < 0 || last - first < 2)
    return {FindingStatus::vacuous, -1, "support shorter than 3"};
  for (int k = first; k <= last; ++k) {
    if (seq[static_cast<std::size_t>(k)] == 0)
      return {FindingStatus::violated, k,
              "support not contiguous: zero at k=" + std::to_string(k)};
  }
  for (int k = first + 1; k < last; ++k) {
    const Int& a = seq[static_cast<std::size_t>(k) - 1];
    const Int& b = seq[static_cast<std::size_t>(k)];
    const Int& c = seq[static_cast<std::size_t>(k) + 1];
    if (b * b < a * c)
      return {FindingStatus::violated, k,
              "c_k^2 < c_{k-1} c_{k+1} at k=" + std::to_string(k) + ": " +
                  b.get_str() + "^2 < " + a.get_str() + " * " + c.get_str()};
  }
  return {FindingStatus::holds, -1, ""};
}

Rational vanishing_sum(Engine& engine, int g, const MultiIndex& prefix) {
  if (g < 1) throw std::invalid_argument("vanishing_sum: g < 1");
  Rational sum = 0;
  Int sign_pow = 1;  // (-2)^i
  for (int i = 0; i <= g; ++i) {
    sum += Rational(sign_pow) *
           engine.eval(Kind::TwistedD, g,
                       MultiIndex::canonicalize(append(prefix.entries(), i)));
    sign_pow *= -2;
  }
  return sum;
}

namespace {

std::string instance_text(Kind kind, const MultiIndex& index) {
  return std::string("kind=") + kind_char(kind) + " index=" + index.text();
}

std::string join_ints(const std::vector<Int>& v) {
  std::string s = "[";
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (j) s += ", ";
    s += v[j].get_str();
  }
  return s + "]";
}

void scan_coefficient_conjectures(Engine& engine, int weight_max,
                                  std::vector<Finding>& out) {
  for (Kind kind : {Kind::TwistedD, Kind::UntwistedD}) {
    for (const MultiIndex& index : canonical_indices(weight_max, weight_max)) {
      BinomialPolynomial p = extract(engine, kind, index);
      DegreeReport deg = degree_report(p);

      Finding degree;
      degree.conjecture = "degree-two-weight";
      degree.instance = instance_text(kind, index);
      degree.status = deg.conjectured_degree_match ? FindingStatus::holds
                                                   : FindingStatus::violated;
      degree.witness = "observed=" + std::to_string(deg.observed) +
                       " expected=" + std::to_string(2 * index.weight()) +
                       " bound=" + std::to_string(deg.bound);
      out.push_back(std::move(degree));

      Finding nonneg;
      nonneg.conjecture = "coefficient-nonnegative";
      nonneg.instance = instance_text(kind, index);
      nonneg.status = FindingStatus::holds;
      for (int k = 0; k <= p.degree_bound(); ++k) {
        if (p.coeffs[static_cast<std::size_t>(k)] < 0) {
          nonneg.status = FindingStatus::violated;
          nonneg.witness = "c_" + std::to_string(k) + " = " +
                           p.coeffs[static_cast<std::size_t>(k)].get_str();
          break;
        }
      }
      out.push_back(std::move(nonneg));

      Finding logc;
      logc.conjecture = "coefficient-log-concave";
      logc.instance = instance_text(kind, index);
      LogConcavity lc = check_log_concavity(p.coeffs);
      logc.status = lc.status;
      logc.witness = lc.status == FindingStatus::violated
                         ? lc.detail + " in " + join_ints(p.coeffs)
                         : lc.detail;
      out.push_back(std::move(logc));
    }
  }
}

void scan_vanishing_and_value_sequences(Engine& engine, int g_max,
                                        std::vector<Finding>& out) {
  for (int g = 1; g <= g_max; ++g) {
    for (const MultiIndex& prefix : canonical_indices(g - 1, g - 1)) {
      Finding vanish;
      vanish.conjecture = "vanishing-sum";
      vanish.instance =
          "g=" + std::to_string(g) + " prefix=" + prefix.text();
      Rational sum = vanishing_sum(engine, g, prefix);
      vanish.status =
          sum == 0 ? FindingStatus::holds : FindingStatus::violated;
      vanish.witness = "sum=" + to_string(sum);
      out.push_back(std::move(vanish));

      for (Kind kind : {Kind::TwistedD, Kind::UntwistedD}) {
        std::vector<Int> seq;
        seq.reserve(static_cast<std::size_t>(g) + 1);
        for (int i = 0; i <= g; ++i) {
          MultiIndex index =
              MultiIndex::canonicalize(append(prefix.entries(), i));
          // 2^{|prefix|+i+1} matches the appended index's own normalization
          seq.push_back(engine.normalized_integer(kind, g, index));
        }
        Finding f;
        f.conjecture = "value-log-concave";
        f.instance = "kind=" + std::string(1, kind_char(kind)) +
                     " g=" + std::to_string(g) + " prefix=" + prefix.text();
        LogConcavity lc = check_log_concavity(seq);
        f.status = lc.status;
        f.witness = lc.status == FindingStatus::violated
                        ? lc.detail + " in " + join_ints(seq)
                        : lc.detail;
        out.push_back(std::move(f));
      }
    }
  }
}

void scan_zigzag(Engine& engine, int g_max, std::vector<Finding>& out) {
  for (int g = 1; g <= std::min(g_max, 5); ++g) {
    MultiIndex index = MultiIndex::canonicalize({g - 1, g});
    Rational value = engine.eval(Kind::TwistedD, g, index);
    Rational scaled = value * Rational(pow2(2 * g));
    Int zigzag = oracles::alternating_permutation_count(2 * g - 1);
    Finding f;
    f.conjecture = "zigzag-count";
    f.instance = "g=" + std::to_string(g);
    f.status = scaled == Rational(zigzag) ? FindingStatus::holds
                                          : FindingStatus::violated;
    f.witness = "2^{2g} * value = " + to_string(scaled) +
                ", alternating permutations of [1..{2g-1}] = " + zigzag.get_str();
    out.push_back(std::move(f));
  }
}

}  // namespace

std::vector<Finding> scan(Engine& engine, int g_max, int weight_max) {
  if (g_max < 1) throw std::invalid_argument("scan: g_max < 1");
  if (weight_max < 0) throw std::invalid_argument("scan: weight_max < 0");
  std::vector<Finding> out;
  scan_coefficient_conjectures(engine, weight_max, out);
  scan_vanishing_and_value_sequences(engine, g_max, out);
  scan_zigzag(engine, g_max, out);
  return out;
}

}  // namespace hodgerec::conjectures
