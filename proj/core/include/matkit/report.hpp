#ifndef MATKIT_REPORT_HPP
#define MATKIT_REPORT_HPP

#include <string>

namespace matkit {

enum class Verdict { pass, fail, vacuous, budget };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::vacuous: return "vacuous";
        case Verdict::budget: return "budget";
    }
    return "?";
}

/// One executed check. Failures always carry a concrete counterexample in
/// `witness` (element labels, sets, sub-verdicts) so they can be re-checked
/// offline; passes carry the certificate when the claim is existential.
struct VerificationReport {
    std::string claim;
    std::string instance;
    Verdict verdict = Verdict::vacuous;
    std::string witness;
    double ms = 0.0;
};

}  // namespace matkit

#endif
