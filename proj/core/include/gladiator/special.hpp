// Copyright 2026 The Gladiator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLADIATOR_SPECIAL_HPP_
#define GLADIATOR_SPECIAL_HPP_

namespace gladiator {

// Arguments of the regularized incomplete beta function with integer
// shape parameters.
struct BetaParams {
  double x;
  int alpha;
  int beta;
};

// I(x, alpha, beta), evaluated as the binomial upper tail
//   sum_{j=alpha}^{alpha+beta-1} C(alpha+beta-1, j) x^j (1-x)^(alpha+beta-1-j)
// or one minus the lower tail, whichever sum lies away from the mean. Large
// shapes use saddle-point binomial terms.
// Throws Error(kOutOfDomain) for x outside [0, 1] and kInvalidArgument for
// nonpositive shapes.
double reg_inc_beta(const BetaParams& p);

// Same, with the complement 1 - x supplied by the caller. Use this when 1 - x
// is available without cancellation (e.g. x = u / (u + v)).
double reg_inc_beta(double x, double one_minus_x, int alpha, int beta);

// P(G > x) for G ~ Gamma(r, 1): e^{-x} sum_{k<r} x^k / k!, i.e. a Poisson
// lower tail.
double gamma_tail(int r, double x);

// Unique positive root of e^t = 1 + 2t (about 1.256431).
double t0_root();

// log C(n, k) for 0 <= k <= n.
double log_choose(int n, int k);

}  // namespace gladiator

#endif  // GLADIATOR_SPECIAL_HPP_
