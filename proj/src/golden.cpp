#include "hodgerec/golden.hpp"

#include <cstddef>

namespace hodgerec::golden {

namespace {

struct ValueRow {
  char kind;
  int g;
  const char* index;
  const char* value;
};

// Literal transcription of the g = 1..5 value tables.
constexpr ValueRow kValueRows[] = {
    // g = 1
    {'D', 1, "1", "1/4"},
    {'d', 1, "1", "1/2"},
    // g = 2
    {'D', 2, "1", "1"},
    {'D', 2, "2", "3/8"},
    {'D', 2, "2,1", "1/8"},
    {'d', 2, "1", "3/2"},
    {'d', 2, "2", "1"},
    {'d', 2, "2,1", "1/2"},
    // g = 3
    {'D', 3, "1", "9/4"},
    {'D', 3, "2", "23/8"},
    {'D', 3, "3", "15/16"},
    {'D', 3, "2,1", "67/16"},
    {'D', 3, "3,1", "15/16"},
    {'D', 3, "3,2", "1/4"},
    {'d', 3, "1", "3"},
    {'d', 3, "2", "11/2"},
    {'d', 3, "3", "3"},
    {'d', 3, "2,1", "12"},
    {'d', 3, "3,1", "4"},
    {'d', 3, "3,2", "3/2"},
    // g = 4
    {'D', 4, "1", "4"},
    {'D', 4, "2", "43/4"},
    {'D', 4, "3", "11"},
    {'D', 4, "4", "105/32"},
    {'D', 4, "2,1", "155/4"},
    {'D', 4, "3,1", "221/8"},
    {'D', 4, "4,1", "105/16"},
    {'D', 4, "3,2", "403/16"},
    {'D', 4, "4,2", "147/32"},
    {'D', 4, "4,3", "17/16"},
    {'D', 4, "4,2,1", "27/8"},
    {'d', 4, "1", "5"},
    {'d', 4, "2", "35/2"},
    {'d', 4, "3", "25"},
    {'d', 4, "4", "12"},
    {'d', 4, "2,1", "85"},
    {'d', 4, "3,1", "85"},
    {'d', 4, "4,1", "30"},
    {'d', 4, "3,2", "211/2"},
    {'d', 4, "4,2", "27"},
    {'d', 4, "4,3", "17/2"},
    {'d', 4, "4,2,1", "27"},
    // g = 5
    {'D', 5, "1", "25/4"},
    {'D', 5, "2", "115/4"},
    {'D', 5, "3", "475/8"},
    {'D', 5, "4", "1689/32"},
    {'D', 5, "5", "945/64"},
    {'D', 5, "2,1", "1555/8"},
    {'D', 5, "3,1", "1195/4"},
    {'D', 5, "4,1", "13185/64"},
    {'D', 5, "5,1", "1575/32"},
    {'D', 5, "3,2", "18599/32"},
    {'D', 5, "4,2", "10179/32"},
    {'D', 5, "5,2", "4095/64"},
    {'D', 5, "4,3", "14801/64"},
    {'D', 5, "5,3", "1185/32"},
    {'D', 5, "5,4", "31/4"},
    {'D', 5, "3,2,1", "56119/32"},
    {'D', 5, "4,2,1", "47367/64"},
    {'D', 5, "5,2,1", "1845/16"},
    {'D', 5, "4,3,1", "11835/32"},
    {'D', 5, "5,3,1", "139/4"},
    {'D', 5, "4,3,2", "1381/8"},
    {'d', 5, "1", "15/2"},
    {'d', 5, "2", "85/2"},
    {'d', 5, "3", "225/2"},
    {'d', 5, "4", "137"},
    {'d', 5, "5", "60"},
    {'d', 5, "2,1", "725/2"},
    {'d', 5, "3,1", "725"},
    {'d', 5, "4,1", "680"},
    {'d', 5, "5,1", "240"},
    {'d', 5, "3,2", "3637/2"},
    {'d', 5, "4,2", "2687/2"},
    {'d', 5, "5,2", "381"},
    {'d', 5, "4,3", "1279"},
    {'d', 5, "5,3", "278"},
    {'d', 5, "5,4", "155/2"},
    {'d', 5, "3,2,1", "14295/2"},
    {'d', 5, "4,2,1", "4087"},
    {'d', 5, "5,2,1", "864"},
    {'d', 5, "4,3,1", "2762"},
    {'d', 5, "5,3,1", "695/2"},
    {'d', 5, "4,3,2", "6905/4"},
};

struct PolyRow {
  char kind;
  const char* index;
  int k_min;
  const char* coeffs;  // space-separated
  bool corrected;
};

// Literal transcription of the normalized-coefficient tables; the one
// corrected row replaces the published "C(g,2) + 2 C(g,2)" (which gives 3 at
// g = 1 instead of the required 4 * 1/4 = 1) by the fit C(g,1) + 2 C(g,2)
// that reproduces the g = 1..5 values.
constexpr PolyRow kPolyRows[] = {
    // single-lambda, twisted
    {'D', "1", 1, "1 2", true},
    {'D', "2", 2, "3 14 12", false},
    {'D', "3", 3, "15 116 220 120", false},
    {'D', "4", 4, "105 1164 3580 4200 1680", false},
    {'D', "5", 5, "945 13854 60508 113120 95760 30240", false},
    // single-lambda, untwisted
    {'d', "1", 1, "2 2", false},
    {'d', "2", 2, "8 20 12", false},
    {'d', "3", 3, "48 208 280 120", false},
    {'d', "4", 4, "384 2464 5440 5040 1680", false},
    {'d', "5", 5, "3840 33408 105728 156800 110880 30240", false},
    // two-lambda, twisted
    {'D', "2,1", 2, "2 61 364 660 360", false},
    {'D', "3,1", 3, "30 764 5440 14800 16800 6720", false},
    {'D', "3,2", 3,
     "16 1548 29298 208724 697144 1171520 957600 302400", false},
    {'D', "4,2", 4,
     "588 37776 688661 5395054 21681016 48109152 59446800 38253600 9979200",
     false},
    {'D', "4,3", 4,
     "272 57844 2318756 36063149 281352536 1243038072 3296287120 5336685200 "
     "5154811200 2724321600 605404800",
     false},
    {'D', "5,3", 5,
     "18960 2372368 82990414 1277796904 10577739904 52202352960 162223105440 "
     "324989181440 418367389440 333860567040 150140390400 29059430400",
     false},
    {'D', "5,4", 5,
     "7936 3077720 218029720 6007887736 84538397486 696641555804 "
     "3632616132464 12530730860032 29238584620960 46328057455680 "
     "49056314186880 33195555993600 12967770816000 2223046425600",
     false},
    // two-lambda, untwisted
    {'d', "2,1", 2, "8 168 640 840 360", false},
    {'d', "3,1", 3, "128 2208 10880 22240 20160 6720", false},
    {'d', "3,2", 3,
     "96 6368 83584 444896 1169504 1608320 1108800 302400", false},
    {'d', "4,2", 4,
     "3456 154688 2037312 12279680 39703552 73258752 77212800 43243200 "
     "9979200",
     false},
    {'d', "4,3", 4,
     "2176 316544 8989696 106257664 661451008 2413320192 5421758720 "
     "7586163200 6435475200 3027024000 605404800",
     false},
    {'d', "5,3", 5,
     "142336 12537344 321875456 3857878016 25934706688 107151344640 "
     "285191920640 498116917760 567135528960 405056171520 164670105600 "
     "29059430400",
     false},
    {'d', "5,4", 5,
     "79360 21071360 1068101632 22535566336 254648976384 1742858805248 "
     "7737100743680 23154969480192 47579454208000 67202354419200 "
     "64079434298880 39385214668800 14079294028800 2223046425600",
     false},
    // three-lambda, twisted
    {'D', "3,2,1", 4,
     "3976 204596 3262812 23632720 90667808 195992832 238996800 153014400 "
     "39916800",
     false},
    {'D', "4,3,2", 5,
     "176768 52956760 3233676672 79792843192 1033784133532 8008401061128 "
     "39884957383392 133034003257408 303050501490880 472326815600640 "
     "494856672710400 332827342848000 129677708160000 22230464256000",
     false},
    // three-lambda, untwisted
    {'d', "3,2,1", 4,
     "23296 798400 9337664 52746112 164374784 297196032 310060800 172972800 "
     "39916800",
     false},
    {'d', "4,3,2", 5,
     "1767680 352174336 15267284992 289757178880 3035405595648 "
     "19658941571072 83824149843456 243660123176448 490474167040000 "
     "683102129149440 645523765286400 394723929600000 140792940288000 "
     "22230464256000",
     false},
};

Kind kind_of(char c) { return c == 'D' ? Kind::TwistedD : Kind::UntwistedD; }

std::vector<GoldenValue> build_values() {
  std::vector<GoldenValue> out;
  out.reserve(std::size(kValueRows));
  for (const ValueRow& row : kValueRows) {
    GoldenValue v;
    v.key.kind = kind_of(row.kind);
    v.key.g = row.g;
    v.key.index = *MultiIndex::parse(row.index);
    v.value = Rational(row.value);
    v.value.canonicalize();
    v.source = std::string("value table g=") + std::to_string(row.g);
    Rational scaled = v.value * Rational(pow2(v.key.index.weight() + 1));
    if (scaled.get_den() != 1)
      throw consistency_error("reference value fails integrality: " +
                              v.key.describe());
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<GoldenPolynomial> build_polynomials() {
  std::vector<GoldenPolynomial> out;
  out.reserve(std::size(kPolyRows));
  for (const PolyRow& row : kPolyRows) {
    GoldenPolynomial p;
    p.kind = kind_of(row.kind);
    p.index = *MultiIndex::parse(row.index);
    p.k_min = row.k_min;
    p.corrected = row.corrected;
    const char* s = row.coeffs;
    while (*s) {
      const char* e = s;
      while (*e && *e != ' ') ++e;
      p.coeffs.emplace_back(std::string(s, e));
      s = *e ? e + 1 : e;
    }
    p.source = std::string("coefficient table, ") +
               (p.kind == Kind::TwistedD ? "D" : "d") + " row " + p.index.text();
    if (row.corrected)
      p.source +=
          " (corrected: published row is inconsistent with the value tables;"
          " this fit reproduces them at g = 1..5)";
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

const std::vector<GoldenValue>& reference_values() {
  static const std::vector<GoldenValue> values = build_values();
  return values;
}

const std::vector<GoldenPolynomial>& reference_polynomials() {
  static const std::vector<GoldenPolynomial> polys = build_polynomials();
  return polys;
}

}  // namespace hodgerec::golden
