#pragma once

#include <optional>
#include <string>
#include <utility>

#include "trigva/liealg/lincomb.hpp"

namespace trigva::liealg {

// Matrix unit E_{m,n}.
using ELabel = std::pair<int, int>;
// G-label (alpha, m) with G_{alpha,m} = E_{alpha+m, m-alpha}.
using GLabel = std::pair<int, int>;

using GlElem = LinComb<ELabel>;

GlElem E(int m, int n);
GlElem G(int alpha, int m);
// G^tau_{alpha,m} = G_{alpha,m} - G_{-alpha,m}
GlElem Gtau(int alpha, int m);

ELabel g_index(int alpha, int m);
std::optional<GLabel> e_to_g(int r, int s);
bool in_A(const GlElem& a);

GlElem gl_bracket(const GlElem& a, const GlElem& b);
Scalar gl_form(const GlElem& a, const GlElem& b);

GlElem apply_sigma(int r, const GlElem& a);
GlElem apply_tau(const GlElem& a);

// Smallest and largest index occurring in any E-label of a; a must be nonzero.
std::pair<int, int> index_span(const GlElem& a);

std::string to_string(const GlElem& a);

}  // namespace trigva::liealg
