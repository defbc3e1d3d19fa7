#pragma once

// The type t(C) = d1 + d2 + 1 - d and the classification built on it, with
// the closed-form Tjurina and freeness-defect formulas for type-2 curves.

#include <optional>
#include <string>
#include <vector>

#include "curveh/analysis.hpp"

namespace curveh {

enum class CurveClass { Free, PlusOneGenerated, Type2A, Type2B, Higher };

struct ClassTag {
    CurveClass kind = CurveClass::Free;
    int t = 0;

    /// "Free", "PlusOneGenerated", "Type2A", "Type2B" or "Higher(t)".
    std::string name() const;
    friend bool operator==(const ClassTag&, const ClassTag&) = default;
};

/// t = d1 + d2 + 1 - d. Throws UncertifiedError for an uncertified
/// resolution and InternalError if t < 0.
int curve_type(const std::vector<int>& exponents, int d, bool certified = true);

/// Class from type and number of generators; a type-2 curve with m outside
/// {3, 4} is an InternalError.
ClassTag classify(int t, int m);

/// Tjurina number predicted for a type-2A (three exponents) or type-2B (four
/// exponents) curve. Throws std::invalid_argument for other classes.
long tau_formula_type2(CurveClass cls, const std::vector<int>& exponents);

/// Freeness defect predicted for a type-2 curve, case chosen by comparing
/// d1 with d2 - 2, d2 - 1 and d2.
long nu_formula_type2(CurveClass cls, const std::vector<int>& exponents);

/// Initial degree of N(f) predicted for a 3-syzygy curve.
int sigma_formula_three_syzygy(int d, const std::vector<int>& exponents);

struct ConsistencyCheck {
    std::string name;
    long computed = 0;
    long expected = 0;
    bool at_most = false;  // computed <= expected instead of equality
    bool ok() const { return at_most ? computed <= expected : computed == expected; }
};

struct CurveReport {
    int d = 0;
    int m = 0;
    std::vector<int> exponents;
    std::vector<int> relation_degrees;
    std::vector<int> shifts;
    long tau = 0;
    std::optional<long> nu;
    std::optional<int> sigma;
    bool n_vanishes = false;
    int type_t = 0;
    ClassTag cls;
    /// Cross-checks between the direct computation and closed forms.
    std::vector<ConsistencyCheck> checks;

    bool consistent() const;
};

/// Builds the report from a certified analysis (throws UncertifiedError
/// otherwise) and evaluates every applicable closed form.
CurveReport make_report(const Analysis& a);

}  // namespace curveh
