#include "padicfam/jumpsets.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace padicfam {

long rho_step(long p, long e, long i) {
    if (i < 1) throw std::invalid_argument("rho_step: need i >= 1");
    return std::min(p * i, i + e);
}

namespace {

Integer rho_step_big(long p, long e, const Integer& i) {
    Integer a = i * p;
    Integer b = i + e;
    return a < b ? a : b;
}

// upper bound ceil(pe/(p-1)) of the non-image window
long window_top(long p, long e) {
    return static_cast<long>(ceil_int(Rational(p * e, p - 1)).get_si());
}

}  // namespace

std::vector<long> non_images(long p, long e) {
    if (p < 2 || e < 1) throw std::invalid_argument("non_images: need p >= 2, e >= 1");
    long top = window_top(p, e);
    std::set<long> hit;
    for (long i = 1; i < top; ++i) {
        long r = rho_step(p, e, i);
        if (r < top) hit.insert(r);
    }
    std::vector<long> out;
    for (long i = 1; i < top; ++i)
        if (!hit.count(i)) out.push_back(i);
    if (static_cast<long>(out.size()) != e)
        throw std::logic_error("non_images: window misses " + std::to_string(out.size()) +
                               " values, expected " + std::to_string(e));
    return out;
}

std::vector<long> non_images_star(long p, long e) {
    if (e % (p - 1) != 0)
        throw std::invalid_argument("non_images_star: extended sets need (p-1) | e");
    auto out = non_images(p, e);
    out.push_back(p * e / (p - 1));
    return out;
}

std::vector<std::vector<long>> jump_sets(long p, long e, long w, bool starred) {
    if (w < 0) throw std::invalid_argument("jump_sets: negative length");
    auto T = starred ? non_images_star(p, e) : non_images(p, e);
    std::vector<std::vector<long>> out;
    if (w == 0) {
        out.push_back({});
        return out;
    }
    std::vector<long> cur;
    auto rec = [&](auto&& self, long last) -> void {
        if (static_cast<long>(cur.size()) == w) {
            out.push_back(cur);
            return;
        }
        long r = rho_step(p, e, last);
        cur.push_back(r);
        self(self, r);
        cur.pop_back();
        for (long t : T) {
            if (t <= r) continue;
            cur.push_back(t);
            self(self, t);
            cur.pop_back();
        }
    };
    for (long t : T) {
        cur.push_back(t);
        rec(rec, t);
        cur.pop_back();
    }
    return out;
}

Integer jump_set_count(long p, long e, long w, bool starred) {
    if (w < 0) throw std::invalid_argument("jump_set_count: negative length");
    if (w == 0) return 1;
    auto T = starred ? non_images_star(p, e) : non_images(p, e);
    long tmax = T.back();
    std::map<std::pair<long, Integer>, Integer> memo;
    auto count = [&](auto&& self, long remaining, const Integer& last) -> Integer {
        if (remaining == 0) return 1;
        Integer r = rho_step_big(p, e, last);
        if (r > tmax) return 1;  // forced chain from here on
        auto key = std::make_pair(remaining, last);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Integer total = self(self, remaining - 1, r);
        for (long t : T)
            if (r < t) total += self(self, remaining - 1, Integer(t));
        memo[key] = total;
        return total;
    };
    Integer total = 0;
    for (long t : T) total += count(count, w - 1, Integer(t));
    return total;
}

long jump_set_stabilization(long p, long e, bool starred, long cap) {
    Integer prev = jump_set_count(p, e, 1, starred);
    for (long w = 2; w <= cap; ++w) {
        Integer cur = jump_set_count(p, e, w, starred);
        if (cur == prev) return w - 1;  // counts are nondecreasing; equality is permanent
        prev = cur;
    }
    return -1;
}

std::vector<std::vector<long>> cyclic_invariants_Qp(long p, long w) {
    if (w < 1) throw std::invalid_argument("cyclic_invariants_Qp: need w >= 1");
    std::vector<std::vector<long>> out;
    if (p > 2) {
        std::vector<long> v(static_cast<size_t>(w));
        for (long k = 0; k < w; ++k) v[static_cast<size_t>(k)] = k + 1;
        out.push_back(v);
    } else if (w == 1) {
        out.push_back({1});
        out.push_back({2});
    } else {
        std::vector<long> v(static_cast<size_t>(w));
        for (long k = 0; k < w; ++k) v[static_cast<size_t>(k)] = k + 2;
        out.push_back(v);
    }
    return out;
}

std::vector<Integer> jump_set_all_slopes_gt_one(long p, long eps, long w) {
    if (w < 0 || eps < 1) throw std::invalid_argument("jump_set_all_slopes_gt_one: bad arguments");
    std::vector<Integer> out;
    for (long k = 0; k <= w; ++k) {
        Integer num = Integer(eps) * (pow_int(p, static_cast<unsigned long>(k + 1)) - p + 1);
        if (num % (p - 1) != 0)
            throw std::domain_error("jump_set_all_slopes_gt_one: eps(p^{k+1}-p+1) not divisible by p-1");
        out.push_back(num / (p - 1));
    }
    return out;
}

}  // namespace padicfam
