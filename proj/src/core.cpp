#include "kodual/core.hpp"

#include <algorithm>
#include <numeric>

namespace kodual {

Subset empty_subset(std::size_t n) { return Subset(n); }

Subset full_subset(std::size_t n) {
    Subset s(n);
    s.set();
    return s;
}

Subset singleton(std::size_t n, Index i) {
    Subset s(n);
    s.set(i);
    return s;
}

Subset subset_of(std::size_t n, const std::vector<Index>& ms) {
    Subset s(n);
    for (Index i : ms) s.set(i);
    return s;
}

std::vector<Index> members(const Subset& s) {
    std::vector<Index> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(i);
    return out;
}

bool subset_less(const Subset& a, const Subset& b) {
    auto i = a.find_first();
    auto j = b.find_first();
    while (i != Subset::npos && j != Subset::npos) {
        if (i != j) return i < j;
        i = a.find_next(i);
        j = b.find_next(j);
    }
    return i == Subset::npos && j != Subset::npos;
}

void sort_unique(std::vector<Subset>& family) {
    std::sort(family.begin(), family.end(), subset_less);
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (is_digit(a[i]) && is_digit(b[j])) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && is_digit(a[ie])) ++ie;
            while (je < b.size() && is_digit(b[je])) ++je;
            auto ra = a.substr(i, ie - i);
            auto rb = b.substr(j, je - j);
            auto strip = [](std::string_view r) {
                auto p = r.find_first_not_of('0');
                return p == std::string_view::npos ? std::string_view{} : r.substr(p);
            };
            auto na = strip(ra), nb = strip(rb);
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            i = ie;
            j = je;
            continue;
        }
        if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
        ++i;
        ++j;
    }
    return (a.size() - i) < (b.size() - j);
}

std::string set_name(const Subset& s, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
        if (!first) out += ',';
        out += names[i];
        first = false;
    }
    out += '}';
    return out;
}

std::vector<Index> sorted_positions(const std::vector<std::string>& names) {
    std::vector<Index> pos(names.size());
    std::iota(pos.begin(), pos.end(), Index{0});
    std::stable_sort(pos.begin(), pos.end(),
                     [&](Index x, Index y) { return natural_less(names[x], names[y]); });
    for (std::size_t i = 1; i < pos.size(); ++i) {
        if (names[pos[i - 1]] == names[pos[i]])
            throw Error("duplicate identifier '" + names[pos[i]] + "'");
    }
    return pos;
}

std::string format_diagnostics(const Diagnostics& d) {
    std::string out;
    for (const auto& x : d) {
        if (!out.empty()) out += '\n';
        out += x.code + ": " + x.message;
    }
    return out;
}

}  // namespace kodual
