#include "symbols.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

namespace asrep {

namespace {

bool strictly_increasing(const Row& r) {
    return std::adjacent_find(r.begin(), r.end(), std::greater_equal<>()) == r.end();
}

bool weakly_increasing(const std::vector<unsigned>& r) {
    return std::adjacent_find(r.begin(), r.end(), std::greater<>()) == r.end();
}

}  // namespace

Symbol::Symbol(Row top, Row bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.empty() || top_.size() != bottom_.size())
        throw std::invalid_argument("symbol rows must be nonempty and of equal length");
    if (!strictly_increasing(top_) || !strictly_increasing(bottom_))
        throw std::invalid_argument("symbol rows must be strictly increasing");
}

unsigned rank(const Symbol& s) {
    const auto m = static_cast<long long>(s.length());
    long long sum = 0;
    for (unsigned v : s.top()) sum += v;
    for (unsigned v : s.bottom()) sum += v;
    const long long n = sum - m * m + m;
    if (n < 0) throw std::invalid_argument("malformed symbol: negative rank");
    return static_cast<unsigned>(n);
}

unsigned max_entry(const Symbol& s) {
    return std::max(s.top().back(), s.bottom().back());
}

Symbol shift_up(const Symbol& s) {
    Row t(s.length() + 1), b(s.length() + 1);
    t[0] = 0;
    b[0] = 0;
    for (std::size_t i = 0; i < s.length(); ++i) {
        t[i + 1] = s.top()[i] + 1;
        b[i + 1] = s.bottom()[i] + 1;
    }
    return Symbol(std::move(t), std::move(b));
}

Symbol reduce(const Symbol& s) {
    Row t = s.top(), b = s.bottom();
    while (!t.empty() && t.front() == 0 && b.front() == 0) {
        t.erase(t.begin());
        b.erase(b.begin());
        for (unsigned& v : t) --v;
        for (unsigned& v : b) --v;
    }
    if (t.empty()) throw std::domain_error("symbol reduces to the empty symbol (rank 0)");
    return Symbol(std::move(t), std::move(b));
}

bool is_degenerate(const Symbol& s) {
    return s.top() == s.bottom();
}

bool is_reduced(const Symbol& s) {
    return s.top().front() != 0 || s.bottom().front() != 0;
}

SymbolClass canonical(const Symbol& s) {
    if (rank(s) == 0) throw std::domain_error("rank-0 symbol has no class representative");
    Symbol r = reduce(s);
    if (r.bottom() < r.top()) r = Symbol(r.bottom(), r.top());
    return SymbolClass(std::move(r));
}

bool equivalent(const Symbol& a, const Symbol& b) {
    return canonical(a) == canonical(b);
}

Bipartition make_bipartition(std::vector<unsigned> alpha, std::vector<unsigned> beta) {
    if (!weakly_increasing(alpha) || !weakly_increasing(beta))
        throw std::invalid_argument("partition parts must be weakly increasing");
    // Zero parts are padding; all of them sit in front.
    alpha.erase(alpha.begin(), std::find_if(alpha.begin(), alpha.end(), [](unsigned v) { return v != 0; }));
    beta.erase(beta.begin(), std::find_if(beta.begin(), beta.end(), [](unsigned v) { return v != 0; }));
    return Bipartition{std::move(alpha), std::move(beta)};
}

Symbol from_bipartition(const Bipartition& b) {
    const std::size_t m = std::max({b.alpha.size(), b.beta.size(), std::size_t{1}});
    Row t(m), bo(m);
    const std::size_t pa = m - b.alpha.size();
    const std::size_t pb = m - b.beta.size();
    for (std::size_t i = 0; i < m; ++i) {
        t[i] = (i >= pa ? b.alpha[i - pa] : 0u) + static_cast<unsigned>(i);
        bo[i] = (i >= pb ? b.beta[i - pb] : 0u) + static_cast<unsigned>(i);
    }
    return Symbol(std::move(t), std::move(bo));
}

Bipartition to_bipartition(const Symbol& s) {
    std::vector<unsigned> a(s.length()), b(s.length());
    for (std::size_t i = 0; i < s.length(); ++i) {
        a[i] = s.top()[i] - static_cast<unsigned>(i);
        b[i] = s.bottom()[i] - static_cast<unsigned>(i);
    }
    return make_bipartition(std::move(a), std::move(b));
}

std::string to_text(const Symbol& s) {
    std::ostringstream os;
    for (std::size_t i = 0; i < s.length(); ++i) {
        if (i) os << ' ';
        os << s.top()[i];
    }
    os << " / ";
    for (std::size_t i = 0; i < s.length(); ++i) {
        if (i) os << ' ';
        os << s.bottom()[i];
    }
    return os.str();
}

namespace {

Row parse_row(std::string_view part) {
    Row out;
    std::size_t i = 0;
    while (i < part.size()) {
        while (i < part.size() && std::isspace(static_cast<unsigned char>(part[i]))) ++i;
        if (i == part.size()) break;
        std::size_t j = i;
        while (j < part.size() && !std::isspace(static_cast<unsigned char>(part[j]))) ++j;
        std::string_view tok = part.substr(i, j - i);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            throw ParseError("bad symbol entry '" + std::string(tok) + "': expected a non-negative integer");
        out.push_back(value);
        i = j;
    }
    return out;
}

}  // namespace

Symbol parse_symbol(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos || text.find('/', slash + 1) != std::string_view::npos)
        throw ParseError("symbol text must contain exactly one '/' separating the rows");
    Row t = parse_row(text.substr(0, slash));
    Row b = parse_row(text.substr(slash + 1));
    if (t.empty() || b.empty()) throw ParseError("symbol rows must be nonempty");
    if (t.size() != b.size()) throw ParseError("symbol rows must have equal length");
    if (!strictly_increasing(t) || !strictly_increasing(b))
        throw ParseError("symbol rows must be strictly increasing");
    return Symbol(std::move(t), std::move(b));
}

}  // namespace asrep
