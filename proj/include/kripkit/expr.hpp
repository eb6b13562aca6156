#pragma once

#include <string>

#include "kripkit/frame_io.hpp"

namespace kripkit {

// Construction expressions build named frames:
//   cluster(n[,label])  chain(n[,label])  strictchain(n[,label])
//   antichain(n[,label])
//   rect(k,m)  saw(k)  tack1(k)  tack2(k,m)
//   product(E,F)  union(E,F)  semisum(E,F)
//   sum(I, F0, .., Fk)           one summand per index world
//   quotient(E, {a,b}{c}...)     blocks of worlds; missing worlds stay alone
//   tilde(E)                     productivization
// Any expression may carry the suffix #bimodal, which relabels a unimodal
// frame to label 1 and adds a diagonal relation under label 2. product()
// relabels its second factor to fresh numeric labels when the alphabets
// collide, so product(chain(2), cluster(2)) is a {1, 2}-frame.
FrameDocument build_expression(const std::string& text);

}  // namespace kripkit
