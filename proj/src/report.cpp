#include "qdl/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace qdl {

CaseResult CaseResult::make(std::string suite, std::string name, double residual, double tol,
                            std::string params, double runtime_s) {
    CaseResult c;
    c.suite = std::move(suite);
    c.name = std::move(name);
    c.residual = residual;
    c.tol = tol;
    c.pass = residual <= tol;
    c.runtime_s = runtime_s;
    c.params = std::move(params);
    return c;
}

bool VerificationReport::all_pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseResult& c) { return c.pass; });
}

double VerificationReport::max_residual() const {
    double m = 0.0;
    for (const auto& c : cases) m = std::max(m, c.residual);
    return m;
}

void VerificationReport::append(const VerificationReport& other) {
    cases.insert(cases.end(), other.cases.begin(), other.cases.end());
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string fmt_cplx(cplx v) {
    return fmt_double(v.real()) + (v.imag() < 0 ? "-" : "+") + fmt_double(std::abs(v.imag())) + "i";
}

namespace {
std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        if (ch == '\n') { out += "\\n"; continue; }
        out.push_back(ch);
    }
    return out;
}

std::string case_json(const CaseResult& c) {
    std::ostringstream os;
    os << "{\"suite\":\"" << json_escape(c.suite) << "\",\"name\":\"" << json_escape(c.name)
       << "\",\"residual\":" << fmt_double(c.residual) << ",\"tol\":" << fmt_double(c.tol)
       << ",\"pass\":" << (c.pass ? "true" : "false") << ",\"params\":\""
       << json_escape(c.params) << "\"}";
    return os.str();
}
}  // namespace

std::string to_json(const VerificationReport& r) {
    std::ostringstream os;
    os << "{\"suite\":\"" << json_escape(r.suite) << "\",\"all_pass\":"
       << (r.all_pass() ? "true" : "false") << ",\"cases\":[";
    for (size_t i = 0; i < r.cases.size(); ++i) {
        if (i) os << ",";
        os << case_json(r.cases[i]);
    }
    os << "]}";
    return os.str();
}

std::string to_jsonl(const VerificationReport& r) {
    std::ostringstream os;
    for (const auto& c : r.cases) os << case_json(c) << "\n";
    return os.str();
}

std::string to_csv(const VerificationReport& r) {
    std::ostringstream os;
    os << "suite,name,residual,tol,pass,params\n";
    for (const auto& c : r.cases) {
        std::string p = c.params;
        for (auto& ch : p)
            if (ch == ',') ch = ';';
        os << c.suite << "," << c.name << "," << fmt_double(c.residual) << ","
           << fmt_double(c.tol) << "," << (c.pass ? 1 : 0) << "," << p << "\n";
    }
    return os.str();
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream os;
    size_t w = 12;
    for (const auto& c : r.cases) w = std::max(w, c.name.size());
    for (const auto& c : r.cases) {
        os << (c.pass ? "PASS  " : "FAIL  ") << c.suite << "  ";
        os << c.name;
        for (size_t i = c.name.size(); i < w + 2; ++i) os << ' ';
        char buf[80];
        std::snprintf(buf, sizeof buf, "residual %.3e  (tol %.1e)", c.residual, c.tol);
        os << buf;
        if (!c.params.empty()) os << "  [" << c.params << "]";
        os << "\n";
    }
    return os.str();
}

}  // namespace qdl
