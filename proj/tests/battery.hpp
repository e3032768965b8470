#pragma once

// Descriptor/target battery shared by the unit tests and the acceptance binary.
// Rates are chosen so witnesses get below 1e-3 by k = 10^4.

#include <string>
#include <vector>

#include "orbitc/orbitc.hpp"

namespace battery {

using namespace orbitc;

struct Case {
    std::string name;
    SequenceDescriptor seq;
    OrbitParam target;
    bool limit;  // expected verdict
};

inline TailRule tail_constant(std::int64_t a) {
    TailRule t;
    t.kind = TailRule::Kind::Constant;
    t.a = a;
    return t;
}
inline TailRule tail_linear(std::int64_t a, std::int64_t b) {
    TailRule t;
    t.kind = TailRule::Kind::Linear;
    t.a = a;
    t.b = b;
    return t;
}
inline TailRule tail_linked(double c) {
    TailRule t;
    t.kind = TailRule::Kind::Linked;
    t.c = c;
    return t;
}

inline SequenceDescriptor generic(std::size_t n, ScalarRule alpha, Weight head, TailRule tail, bool first = false,
                                  std::int64_t K = 10000) {
    SequenceDescriptor s;
    s.kind = SeqKind::Generic;
    s.n = n;
    s.K = K;
    s.alpha = alpha;
    s.head = std::move(head);
    s.tail = tail;
    s.varying_first = first;
    return s;
}

inline SequenceDescriptor intermediate(Weight mu, ScalarRule r, std::int64_t K = 10000) {
    SequenceDescriptor s;
    s.kind = SeqKind::Intermediate;
    s.n = mu.size() + 1;
    s.K = K;
    s.mu = std::move(mu);
    s.r = r;
    return s;
}

inline SequenceDescriptor character(Weight lambda, std::vector<Weight> prefix = {}, std::int64_t K = 10000) {
    SequenceDescriptor s;
    s.kind = SeqKind::Character;
    s.n = lambda.size();
    s.K = K;
    s.lambda = std::move(lambda);
    s.prefix = std::move(prefix);
    return s;
}

// case 1: alpha_k = 1/2 + 1/k, lambda = (1,0)
inline SequenceDescriptor seq_case1() { return generic(2, ScalarRule::harmonic(1.0, 0.5), {1}, tail_constant(0)); }
// case 2(i): alpha_k = 1/(2k), lambda^k = (0, -k)
inline SequenceDescriptor seq_case2i() { return generic(2, ScalarRule::harmonic(0.5), {0}, tail_linked(-0.5)); }
// case 2(i), n = 3: lambda^k = (2, 1, -k)
inline SequenceDescriptor seq_case2i_n3() { return generic(3, ScalarRule::harmonic(0.5), {2, 1}, tail_linked(-0.5)); }
// case 2(ii): alpha_k = -1/(2k), lambda^k = (k, 0)
inline SequenceDescriptor seq_case2ii() { return generic(2, ScalarRule::harmonic(-0.5), {0}, tail_linked(-0.5), true); }
// case 3, alpha > 0, unbounded tail: alpha_k = 1/k^3, lambda^k = (0, -k)
inline SequenceDescriptor seq_case3_pos() { return generic(2, ScalarRule::power(1.0, 3.0), {0}, tail_linear(0, -1)); }
// case 3, alpha < 0, unbounded tail: alpha_k = -1/k^3, lambda^k = (k, 0)
inline SequenceDescriptor seq_case3_neg() {
    return generic(2, ScalarRule::power(-1.0, 3.0), {0}, tail_linear(0, 1), true);
}
// case 3, bounded: alpha_k = 1/k^2, lambda = (1, 0)
inline SequenceDescriptor seq_case3_bounded() { return generic(2, ScalarRule::power(1.0, 2.0), {1}, tail_constant(0)); }
// case 4: mu = (1), r_k = 2 + 1/k
inline SequenceDescriptor seq_case4() { return intermediate({1}, ScalarRule::harmonic(1.0, 2.0)); }
// case 5: mu = (1), r_k = 1/k
inline SequenceDescriptor seq_case5() { return intermediate({1}, ScalarRule::harmonic(1.0)); }
// case 5, n = 3: mu = (2, 0), r_k = k^{-3/2}
inline SequenceDescriptor seq_case5_n3() { return intermediate({2, 0}, ScalarRule::power(1.0, 1.5)); }
// case 6: lambda = (1,1) after two stray samples
inline SequenceDescriptor seq_case6() { return character({1, 1}, {{3, 0}, {2, 0}}); }

inline std::vector<Case> positives() {
    return {
        {"case1", seq_case1(), Generic{{1, 0}, 0.5}, true},
        {"case2i", seq_case2i(), Intermediate{{0}, 1.0}, true},
        {"case2i_n3", seq_case2i_n3(), Intermediate{{2, 1}, 1.0}, true},
        {"case2ii", seq_case2ii(), Intermediate{{0}, 1.0}, true},
        {"case3_pos", seq_case3_pos(), Character{{1, -1}}, true},
        {"case3_neg", seq_case3_neg(), Character{{2, 0}}, true},
        {"case3_bounded", seq_case3_bounded(), Character{{2, 0}}, true},
        {"case4", seq_case4(), Intermediate{{1}, 2.0}, true},
        {"case5", seq_case5(), Character{{2, 0}}, true},
        {"case5_n3", seq_case5_n3(), Character{{2, 1, 0}}, true},
        {"case6", seq_case6(), Character{{1, 1}}, true},
    };
}

inline std::vector<Case> negatives() {
    return {
        {"neg_case1_alpha", seq_case1(), Generic{{1, 0}, 0.7}, false},
        {"neg_case1_lambda", seq_case1(), Generic{{2, 0}, 0.5}, false},
        {"neg_case2i_r", seq_case2i(), Intermediate{{0}, 2.0}, false},
        {"neg_case2i_head", seq_case2i(), Intermediate{{1}, 1.0}, false},
        {"neg_case3_interlace", seq_case3_pos(), Character{{1, 1}}, false},
        {"neg_case4_r", seq_case4(), Intermediate{{1}, 3.0}, false},
        {"neg_case5_interlace", seq_case5(), Character{{3, 2}}, false},
        {"neg_case6", seq_case6(), Character{{2, 0}}, false},
    };
}

// extra pairs for the dual-side agreement check, verdict from the orbit side
inline std::vector<Case> agreement_extras() {
    return {
        {"x_case2i_char", seq_case2i(), Character{{0, 0}}, false},
        {"x_case2i_generic", seq_case2i(), Generic{{0, 0}, 0.5}, false},
        {"x_case2ii_char", seq_case2ii(), Character{{0, 0}}, false},
        {"x_case3_pos_other", seq_case3_pos(), Character{{0, -5}}, true},
        {"x_case3_neg_wrongside", seq_case3_neg(), Character{{1, 1}}, false},
        {"x_case3_bounded_same", seq_case3_bounded(), Character{{1, 0}}, true},
        {"x_case3_bounded_intermediate", seq_case3_bounded(), Intermediate{{1}, 1.0}, false},
        {"x_case4_char", seq_case4(), Character{{1, 0}}, false},
        {"x_case5_other", seq_case5(), Character{{1, -4}}, true},
        {"x_case5_intermediate", seq_case5(), Intermediate{{1}, 0.5}, false},
        {"x_case6_intermediate", seq_case6(), Intermediate{{1}, 1.0}, false},
    };
}

}  // namespace battery
