#include "fermibasis/gaussian.hpp"

namespace fermibasis::exactmath {

namespace {

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : s)
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
            throw std::invalid_argument("bad rational literal: " + s);
    mpq_class q(s);
    q.canonicalize();
    return q;
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& s) {
    auto fail = [&] { throw std::invalid_argument("bad scalar literal: " + s); };
    if (s.size() < 7 || s.front() != '(') fail();
    std::size_t close1 = s.find(')');
    if (close1 == std::string::npos) fail();
    if (s.compare(close1, 2, ")+") != 0 || close1 + 2 >= s.size() || s[close1 + 2] != '(') fail();
    std::size_t close2 = s.find(')', close1 + 3);
    if (close2 == std::string::npos || s.compare(close2, 2, ")i") != 0 || close2 + 2 != s.size()) fail();
    return GaussianRational(parse_rational(s.substr(1, close1 - 1)),
                            parse_rational(s.substr(close1 + 3, close2 - close1 - 3)));
}

}  // namespace fermibasis::exactmath
