#include "torjump/render.hpp"

#include <sstream>

namespace torjump {

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "tex") return OutputFormat::tex;
    throw std::invalid_argument("unknown format: " + s);
}

std::string render_jumps_text(const JumpMultiset& m) {
    std::ostringstream os;
    bool first = true;
    for (auto& [v, mult] : m.entries()) {
        if (!first) os << ", ";
        first = false;
        os << v.str() << ":" << mult;
    }
    if (first) os << "(empty)";
    return os.str();
}

std::string render_jumps_csv(const JumpMultiset& m) {
    std::ostringstream os;
    os << "value,mult\n";
    for (auto& [v, mult] : m.entries()) os << v.str() << "," << mult << "\n";
    return os.str();
}

std::string render_jumps_tex(const JumpMultiset& m) {
    std::ostringstream os;
    os << "\\{";
    bool first = true;
    for (auto& [v, mult] : m.entries()) {
        if (!first) os << ",\\, ";
        first = false;
        if (v.is_integer())
            os << v.num();
        else
            os << "\\tfrac{" << v.num() << "}{" << v.den() << "}";
        os << "^{(" << mult << ")}";
    }
    os << "\\}";
    return os.str();
}

std::string render_d_jumps_text(const DJumpMultiset& m) {
    std::ostringstream os;
    bool first = true;
    for (auto& [r, mult] : m.entries) {
        if (!first) os << ", ";
        first = false;
        os << r << ":" << mult;
    }
    if (first) os << "(empty)";
    os << "  (mod " << m.modulus << ")";
    return os.str();
}

std::string render_d_jumps_csv(const DJumpMultiset& m) {
    std::ostringstream os;
    os << "residue,mult,modulus\n";
    for (auto& [r, mult] : m.entries)
        os << r << "," << mult << "," << m.modulus << "\n";
    return os.str();
}

std::string render_d_jumps_tex(const DJumpMultiset& m) {
    std::ostringstream os;
    os << "\\{";
    bool first = true;
    for (auto& [r, mult] : m.entries) {
        if (!first) os << ",\\, ";
        first = false;
        os << r << "^{(" << mult << ")}";
    }
    os << "\\} \\subseteq \\mathbf{Z}/" << m.modulus << "\\mathbf{Z}";
    return os.str();
}

namespace {

std::string lpoly_factor(const LPolynomial& c) {
    std::string s = c.str();
    if (s.find(' ') != std::string::npos || s.find('+') != std::string::npos)
        return "(" + s + ")";
    return s;
}

} // namespace

std::string render_series_text(const RationalSeries& s, long long preview_terms) {
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : s.prefix) {
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << lpoly_factor(c) << "x^" << e;
    }
    for (auto& t : s.tails) {
        if (!first) os << " + ";
        first = false;
        os << lpoly_factor(t.coeff) << "x^" << t.alpha << "/(1 - ";
        if (t.A != 0) os << "L^" << t.A << " ";
        os << "x^" << t.B << ")";
        if (t.den_power > 1) os << "^" << t.den_power;
    }
    if (first) os << "0";
    if (preview_terms > 0) {
        os << "\n= ";
        auto coeffs = s.expand_to(preview_terms);
        bool f2 = true;
        for (long long d = 1; d <= preview_terms; ++d) {
            const auto& c = coeffs[(size_t)d - 1];
            if (c.is_zero()) continue;
            if (!f2) os << " + ";
            f2 = false;
            os << lpoly_factor(c) << "x^" << d;
        }
        if (f2) os << "0";
        os << " + O(x^" << (preview_terms + 1) << ")";
    }
    return os.str();
}

std::string render_series_tex(const RationalSeries& s) {
    std::ostringstream os;
    auto tex_poly = [](const LPolynomial& c) {
        std::string t = c.str();
        std::string out;
        for (size_t i = 0; i < t.size(); ++i) {
            if (t[i] == 'L')
                out += "\\mathbf{L}";
            else if (t[i] == '*')
                out += " ";
            else
                out += t[i];
        }
        return out;
    };
    bool first = true;
    for (auto& [e, c] : s.prefix) {
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "\\left(" << tex_poly(c) << "\\right)x^{" << e << "}";
    }
    for (auto& t : s.tails) {
        if (!first) os << " + ";
        first = false;
        os << "\\frac{\\left(" << tex_poly(t.coeff) << "\\right)x^{" << t.alpha
           << "}}{\\left(1-";
        if (t.A != 0) os << "\\mathbf{L}^{" << t.A << "}";
        os << "x^{" << t.B << "}\\right)";
        if (t.den_power > 1) os << "^{" << t.den_power << "}";
        os << "}";
    }
    if (first) os << "0";
    return os.str();
}

} // namespace torjump
