#include "hlf/fibration.hpp"

#include <sstream>

namespace hlf {

FibrationNumerics::FibrationNumerics(std::int64_t g_, Int n_, std::vector<Int> sep_)
    : g(g_), n(std::move(n_)), sep(std::move(sep_)) {
    if (g < 2)
        throw std::invalid_argument("fibration: genus must satisfy g >= 2, got g=" + std::to_string(g));
    if (n < 1)
        throw std::invalid_argument("fibration: need n >= 1 non-separating vanishing cycles, got n=" + n.str());
    if (sep.size() != sep_slots(g))
        throw std::invalid_argument("fibration: sep must have exactly floor(g/2)=" +
                                    std::to_string(sep_slots(g)) + " entries, got " +
                                    std::to_string(sep.size()));
    for (std::size_t i = 0; i < sep.size(); ++i)
        if (sep[i] < 0)
            throw std::invalid_argument("fibration: separating count s_" + std::to_string(i + 1) +
                                        " must be >= 0, got " + sep[i].str());
}

Int FibrationNumerics::separating_total() const {
    Int s = 0;
    for (const Int& sh : sep) s += sh;
    return s;
}

Int FibrationNumerics::weighted_sum() const {
    Int x = 0;
    for (std::size_t i = 0; i < sep.size(); ++i) {
        const std::int64_t h = static_cast<std::int64_t>(i) + 1;
        x += Int(h) * Int(g - h) * sep[i];
    }
    return x;
}

bool lex_less(const FibrationNumerics& a, const FibrationNumerics& b) {
    if (a.g != b.g) return a.g < b.g;
    if (a.n != b.n) return a.n < b.n;
    return a.sep < b.sep;
}

std::string to_string(const FibrationNumerics& f) {
    std::ostringstream os;
    os << "(g=" << f.g << ", n=" << f.n.str() << ", sep=[";
    for (std::size_t i = 0; i < f.sep.size(); ++i) {
        if (i) os << ",";
        os << f.sep[i].str();
    }
    os << "])";
    return os.str();
}

}  // namespace hlf
