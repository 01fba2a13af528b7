#include "kcluster/realization.hpp"

#include <algorithm>
#include <string>

#include "kcluster/errors.hpp"

namespace kcluster {

namespace {

bool is_blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

} // namespace

IntervalRealization parse_realization(std::string_view text) {
    std::vector<std::pair<int, std::string_view>> lines; // (line number, content)
    {
        int lineno = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto nl = text.find('\n', pos);
            const auto end = nl == std::string_view::npos ? text.size() : nl;
            ++lineno;
            std::string_view line = text.substr(pos, end - pos);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (!is_blank_or_comment(line)) lines.emplace_back(lineno, line);
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
        }
    }

    if (lines.empty()) throw ParseError("missing node count at line 1", 1);

    auto [count_line, count_text] = lines.front();
    const auto count_fields = split_fields(count_text);
    long long n = 0;
    if (count_fields.size() != 1) {
        throw ParseError("malformed node count at line " + std::to_string(count_line), count_line);
    }
    try {
        n = std::stoll(std::string(count_fields[0]));
    } catch (...) {
        throw ParseError("malformed node count at line " + std::to_string(count_line), count_line);
    }
    if (n < 1) {
        throw ParseError("node count must be at least 1 at line " + std::to_string(count_line),
                         count_line);
    }
    if (static_cast<long long>(lines.size()) - 1 < n) {
        const int last = lines.back().first;
        throw ParseError("expected " + std::to_string(n) + " interval lines, got " +
                             std::to_string(lines.size() - 1) + " by line " + std::to_string(last),
                         last);
    }
    if (static_cast<long long>(lines.size()) - 1 > n) {
        const int extra = lines[static_cast<std::size_t>(n) + 1].first;
        throw ParseError("trailing content at line " + std::to_string(extra), extra);
    }

    IntervalRealization r;
    r.intervals.reserve(static_cast<std::size_t>(n));
    for (long long i = 1; i <= n; ++i) {
        auto [lineno, line] = lines[static_cast<std::size_t>(i)];
        const auto fields = split_fields(line);
        if (fields.size() != 2) {
            throw ParseError("malformed interval line at line " + std::to_string(lineno), lineno);
        }
        const auto left = Rational::parse(fields[0]);
        const auto right = Rational::parse(fields[1]);
        if (!left || !right) {
            throw ParseError("malformed endpoint at line " + std::to_string(lineno), lineno);
        }
        if (*right < *left) {
            throw ParseError("left > right at line " + std::to_string(lineno), lineno);
        }
        r.intervals.push_back(ClosedInterval{*left, *right});
    }
    return r;
}

std::optional<std::pair<int, int>> containment_witness(const IntervalRealization& r) {
    const int n = r.n();

    // Sort order (left asc, right desc, index asc); the first interval in
    // this order that strictly contains another is the leftmost-widest
    // container.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ia = r.at(a);
        const auto& ib = r.at(b);
        if (ia.left != ib.left) return ia.left < ib.left;
        if (ia.right != ib.right) return ib.right < ia.right;
        return a < b;
    });

    for (int cand : order) {
        const auto& outer = r.at(cand);
        int best = 0;
        for (int other = 1; other <= n; ++other) {
            if (other == cand) continue;
            const auto& inner = r.at(other);
            if (!contains_strictly(outer, inner)) continue;
            if (best == 0) { best = other; continue; }
            // Innermost containee: smallest right, then largest left, then index.
            const auto& cur = r.at(best);
            if (inner.right != cur.right) {
                if (inner.right < cur.right) best = other;
            } else if (inner.left != cur.left) {
                if (cur.left < inner.left) best = other;
            }
        }
        if (best != 0) return std::make_pair(cand, best);
    }
    return std::nullopt;
}

bool is_proper(const IntervalRealization& r) {
    const int n = r.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& ia = r.at(a);
        const auto& ib = r.at(b);
        if (ia.left != ib.left) return ia.left < ib.left;
        if (ia.right != ib.right) return ib.right < ia.right;
        return a < b;
    });

    // Scan with the widest interval seen so far; every containment pair is
    // witnessed by it.
    bool have_best = false;
    ClosedInterval best;
    for (int idx : order) {
        const auto& cur = r.at(idx);
        if (have_best) {
            if (cur.right < best.right) return false;
            if (cur.right == best.right && best.left < cur.left) return false;
        }
        if (!have_best || best.right < cur.right) {
            best = cur;
            have_best = true;
        }
    }
    return true;
}

} // namespace kcluster
