#pragma once

#include <string>
#include <vector>

#include "qdl/modular.hpp"

namespace qdl {

// One verified identity / relation / correspondence case.
struct CaseResult {
    std::string suite;
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
    double runtime_s = 0.0;
    std::string params;  // human-readable parameter bundle

    static CaseResult make(std::string suite, std::string name, double residual, double tol,
                           std::string params = {}, double runtime_s = 0.0);
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;

    bool all_pass() const;
    double max_residual() const;
    void append(const VerificationReport& other);
    void add(CaseResult c) { cases.push_back(std::move(c)); }
};

// Deterministic number formatting used by every serializer (byte-identical
// reports under identical inputs is a contract).
std::string fmt_double(double v);
std::string fmt_cplx(cplx v);

std::string to_json(const VerificationReport& r);
std::string to_jsonl(const VerificationReport& r);  // one case per line
std::string to_csv(const VerificationReport& r);
std::string to_text(const VerificationReport& r);   // aligned columns

}  // namespace qdl
