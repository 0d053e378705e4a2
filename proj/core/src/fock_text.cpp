#include "fermibasis/fock_text.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fermibasis::fock {

std::string render(const FockVector& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        if (m.central.t1 != 0) os << " * T1^" << m.central.t1;
        if (!m.central.h.empty()) {
            os << " *";
            for (const auto& [p, e] : m.central.h) os << " H" << p << "^" << e;
        }
        if (!m.bstar.empty()) {
            os << " * b*[";
            for (std::size_t i = 0; i < m.bstar.size(); ++i) os << (i ? "," : "") << m.bstar[i];
            os << "]";
        }
        if (!m.cstar.empty()) {
            os << " * c*[";
            for (std::size_t i = 0; i < m.cstar.size(); ++i) os << (i ? "," : "") << m.cstar[i];
            os << "]";
        }
        os << " |vac>";
    }
    return os.str();
}

namespace {

class Cursor {
public:
    explicit Cursor(const std::string& s) : s_(s) {}

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool lookahead(const std::string& lit) const { return s_.compare(pos_, lit.size(), lit) == 0; }

    bool try_consume(const std::string& lit) {
        if (!lookahead(lit)) return false;
        pos_ += lit.size();
        return true;
    }

    void expect(const std::string& lit) {
        if (!try_consume(lit)) fail("expected '" + lit + "'");
    }

    int integer() {
        std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("expected integer");
        return std::stoi(s_.substr(start, pos_ - start));
    }

    /// "(re)+(im)i" with mpq bodies.
    exactmath::GaussianRational scalar() {
        std::size_t close1 = s_.find(')', pos_);
        if (peek() != '(' || close1 == std::string::npos) fail("expected scalar");
        std::size_t close2 = s_.find(')', close1 + 1);
        if (close2 == std::string::npos || close2 + 1 >= s_.size() || s_[close2 + 1] != 'i')
            fail("expected scalar");
        auto text = s_.substr(pos_, close2 + 2 - pos_);
        pos_ = close2 + 2;
        return exactmath::GaussianRational::parse(text);
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("FockVector parse error at " + std::to_string(pos_) + ": " + why);
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

std::vector<int> index_list(Cursor& c) {
    std::vector<int> out;
    c.expect("[");
    out.push_back(c.integer());
    while (c.try_consume(",")) out.push_back(c.integer());
    c.expect("]");
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i - 1] <= out[i]) c.fail("star indices must be strictly decreasing");
    if (out.back() < 1) c.fail("star indices must be >= 1");
    return out;
}

}  // namespace

FockVector parse(const std::string& text) {
    if (text == "0") return FockVector();
    Cursor c(text);
    FockVector v;
    do {
        PBWMonomial m;
        exactmath::GaussianRational coeff = c.scalar();
        if (c.try_consume(" * T1^")) m.central.t1 = c.integer();
        if (c.lookahead(" * H")) {
            c.expect(" *");
            while (c.try_consume(" H")) {
                int p = c.integer();
                c.expect("^");
                int e = c.integer();
                if (p < 1 || e < 1 || (!m.central.h.empty() && m.central.h.back().first >= p))
                    c.fail("H factors must have increasing indices and positive exponents");
                m.central.h.push_back({p, e});
            }
        }
        if (c.try_consume(" * b*")) m.bstar = index_list(c);
        if (c.try_consume(" * c*")) m.cstar = index_list(c);
        c.expect(" |vac>");
        v.add_term(m, coeff);
    } while (c.try_consume(" + "));
    if (!c.done()) c.fail("trailing input");
    return v;
}

}  // namespace fermibasis::fock
