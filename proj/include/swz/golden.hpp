// The embedded golden corpus: one constructed instance per denominator class
// at the smallest legal m, plus near-miss negatives.
#pragma once

#include <string>
#include <vector>

#include "swz/reducer.hpp"

namespace swz {

struct GoldenEntry {
    std::string text;
    QTag expected_tag;
    Outcome expected_primary;
};

inline const std::vector<GoldenEntry>& golden_corpus() {
    static const std::vector<GoldenEntry> corpus = {
        // QE1: (f+z)^2 (f+z^2)^2, m=1
        {"S(f) = (f-1)^4/((f+z)^2*(f+z^2)^2)", QTag::QE1, Outcome::Riccati},
        // QE2: (f^2+zf+z)^2, m=1
        {"S(f) = (f-1)^4/(f^2+z*f+z)^2", QTag::QE2, Outcome::Riccati},
        // QE3: (f+z)^2, m=1
        {"S(f) = (f^2+1)/(f+z)^2", QTag::QE3, Outcome::Riccati},
        // QE4: (f+z)^2 (f-1)(f-2), m=1
        {"S(f) = (f-3)^4/((f+z)^2*(f-1)*(f-2))", QTag::QE4, Outcome::FirstOrderE2},
        // QE5: (f+z)^2 (f-1), m=1, n=2
        {"S(f) = (f-3)^3/((f+z)^2*(f-1))", QTag::QE5, Outcome::NoTranscendentalSolution},
        // QE6: (f-1)(f-2)(f-3)(f-4), m=1
        {"S(f) = (f-5)^4/((f-1)*(f-2)*(f-3)*(f-4))", QTag::QE6, Outcome::FirstOrderE3},
        // QE7: (f-1)(f-2)(f-3), m=1, n=2
        {"S(f) = (f-5)^3/((f-1)*(f-2)*(f-3))", QTag::QE7, Outcome::FirstOrderE7},
        // QE8: (f-1)^3 (f-2)^2 (f-3)^2, m=3
        {"S(f)^3 = (f-5)^7/((f-1)^3*(f-2)^2*(f-3)^2)", QTag::QE8,
         Outcome::NoTranscendentalSolution},
        // QE9: (f-1)^6 (f-2)^4 (f-3)^3, m=6
        {"S(f)^6 = (f-5)^13/((f-1)^6*(f-2)^4*(f-3)^3)", QTag::QE9,
         Outcome::NoTranscendentalSolution},
        // QE10: (f-1)^15 (f-2)^10 (f-3)^6, m=15
        {"S(f)^15 = (f-5)^31/((f-1)^15*(f-2)^10*(f-3)^6)", QTag::QE10,
         Outcome::NoTranscendentalSolution},
        // QE11: (f-1)^3 (f-2)^2 (f-3), m=3
        {"S(f)^3 = (f-5)^6/((f-1)^3*(f-2)^2*(f-3))", QTag::QE11, Outcome::FirstOrderE6},
        // QE12: (f-1)^2 (f-2)^2 (f-3)^2, m=3
        {"S(f)^3 = (f-5)^6/((f-1)^2*(f-2)^2*(f-3)^2)", QTag::QE12, Outcome::FirstOrderE4},
        // QE13: (f-1)^2 (f-2)(f-3), m=2
        {"S(f)^2 = (f-5)^4/((f-1)^2*(f-2)*(f-3))", QTag::QE13, Outcome::FirstOrderE5},
        // QE14: (f-1)(f-2), m=1, n1=n2=2
        {"S(f) = (f-5)^2/((f-1)*(f-2))", QTag::QE14, Outcome::FirstOrderE7},
        // QE15: (f-1), m=1, n=2
        {"S(f) = (f-5)/(f-1)", QTag::QE15, Outcome::Riccati},
        // QE16: Q = 7(z+1), m=1
        {"S(f) = (3*z)/(7*z+7)", QTag::QE16, Outcome::SchwarzE14},
    };
    return corpus;
}

struct NearMissEntry {
    std::string text;
    std::string why;
    QTag forbidden_tag;  // the tag the instance must NOT classify to
};

inline const std::vector<NearMissEntry>& near_miss_corpus() {
    static const std::vector<NearMissEntry> corpus = {
        {"S(f) = (f-5)^4/((f+z)^4)", "equal b1 = b2 collapses the pair to multiplicity 4m",
         QTag::QE1},
        {"S(f) = (f-5)^4/((f^2+1)^2)", "both quadratic coefficients constant", QTag::QE2},
        {"S(f) = (f^2+1)/((f+1)^2)", "b must be nonconstant", QTag::QE3},
        {"S(f) = (f-5)^4/((f+1)^2*(f-1)*(f-2))", "b must be nonconstant", QTag::QE4},
        {"S(f) = (f-5)^4/((f-1)^2*(f-2)*(f-3))", "pair multiplicity m/2 needs even m",
         QTag::QE13},
        {"S(f) = (f-5)^4/((f+z)^2*(f-1)*(f-1))",
         "repeated tau collapses the two simple factors into one of multiplicity 2m", QTag::QE4},
        {"S(f)^3 = (f-5)^5/((f-1)^3*(f-2)*(f-3))", "third exponent divides no admissible n",
         QTag::QE11},
        {"S(f) = (f-5)^2/((f-1)^2)", "single constant factor needs exponent at most m",
         QTag::QE15},
        {"S(f) = (f-5)^4/((f-z)*(f-2)*(f-3)*(f-4))", "one root is nonconstant", QTag::QE6},
        {"S(f)^2 = (f-5)^4/((f-1)^3*(f-2))", "exponent 3 divides no admissible 2m", QTag::QE14},
    };
    return corpus;
}

}  // namespace swz
