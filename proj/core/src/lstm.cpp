// Copyright 2026 The tvfx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tvfx/nn/lstm.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <memory>

#include "tvfx/common.hpp"

namespace tvfx::nn {

namespace {

using MatRM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapM = Eigen::Map<MatRM>;
using MapCM = Eigen::Map<const MatRM>;

double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

double cell_act(Act kind, double v) {
  return kind == Act::kTanh ? std::tanh(v) : v;
}
double cell_act_grad_from_out(Act kind, double y) {
  return kind == Act::kTanh ? 1.0 - y * y : 1.0;
}

// Saved per-direction activations for backprop through time.
struct DirectionCache {
  MatRM xm;      // masked input (S, I)
  MatRM hm;      // masked previous hidden per step (S, U)
  MatRM gates;   // i, f, g, o after nonlinearity (S, 4U)
  MatRM c;       // cell state (S, U)
  MatRM hc;      // act(c) (S, U)
  std::vector<double> in_mask;   // (I)
  std::vector<double> rec_mask;  // (U)
  std::vector<std::size_t> order;  // processing order over steps
};

std::vector<double> make_mask(std::size_t n, double rate, bool training,
                              Rng& rng) {
  std::vector<double> m(n, 1.0);
  if (!training || rate <= 0.0) return m;
  double keep = 1.0 - rate;
  for (auto& v : m) v = rng.uniform() < keep ? 1.0 / keep : 0.0;
  return m;
}

// Runs one direction, filling the cache; returns (S, U) hidden outputs in
// processing order (cache.order maps row -> original step).
MatRM run_direction(const Tensor& x, const LstmDirection& dir, std::size_t units,
                    Act act, double dropout, double rec_dropout, bool training,
                    std::uint64_t mask_seed, bool reversed, DirectionCache& cache) {
  std::size_t steps = x.dim(0), in_dim = x.dim(1);
  std::size_t g4 = 4 * units;
  MapCM wx(dir.wx->value.data(), in_dim, g4);
  MapCM wh(dir.wh->value.data(), units, g4);
  MapCM bias(dir.b->value.data(), 1, g4);

  Rng rng(mix_seed(mask_seed, reversed ? 2 : 1));
  cache.in_mask = make_mask(in_dim, dropout, training, rng);
  cache.rec_mask = make_mask(units, rec_dropout, training, rng);

  cache.order.resize(steps);
  for (std::size_t s = 0; s < steps; ++s) {
    cache.order[s] = reversed ? steps - 1 - s : s;
  }

  cache.xm.resize(steps, in_dim);
  for (std::size_t s = 0; s < steps; ++s) {
    const double* row = x.data() + cache.order[s] * in_dim;
    for (std::size_t i = 0; i < in_dim; ++i) {
      cache.xm(s, i) = row[i] * cache.in_mask[i];
    }
  }
  // All input projections in one GEMM.
  MatRM xproj = cache.xm * wx;

  cache.hm.resize(steps, units);
  cache.gates.resize(steps, g4);
  cache.c.resize(steps, units);
  cache.hc.resize(steps, units);
  MatRM h_out(steps, units);

  Eigen::RowVectorXd h = Eigen::RowVectorXd::Zero(units);
  Eigen::RowVectorXd c_prev = Eigen::RowVectorXd::Zero(units);
  Eigen::RowVectorXd hm(units), a(g4);
  for (std::size_t s = 0; s < steps; ++s) {
    for (std::size_t u = 0; u < units; ++u) hm(u) = h(u) * cache.rec_mask[u];
    cache.hm.row(s) = hm;
    a = xproj.row(s) + hm * wh + bias.row(0);
    for (std::size_t u = 0; u < units; ++u) {
      double gi = sigmoid(a(u));
      double gf = sigmoid(a(units + u));
      double gg = cell_act(act, a(2 * units + u));
      double go = sigmoid(a(3 * units + u));
      double cc = gf * c_prev(u) + gi * gg;
      double hcv = cell_act(act, cc);
      cache.gates(s, u) = gi;
      cache.gates(s, units + u) = gf;
      cache.gates(s, 2 * units + u) = gg;
      cache.gates(s, 3 * units + u) = go;
      cache.c(s, u) = cc;
      cache.hc(s, u) = hcv;
      h(u) = go * hcv;
      h_out(s, u) = h(u);
    }
    c_prev = cache.c.row(s);
  }
  return h_out;
}

// BPTT for one direction. dh_out rows are in processing order. Returns
// gradient w.r.t. the original (unmasked, un-reordered) input x.
MatRM backward_direction(const DirectionCache& cache, const LstmDirection& dir,
                         std::size_t units, Act act, const MatRM& dh_out) {
  std::size_t steps = cache.xm.rows();
  std::size_t in_dim = cache.xm.cols();
  std::size_t g4 = 4 * units;
  MapCM wx(dir.wx->value.data(), in_dim, g4);
  MapCM wh(dir.wh->value.data(), units, g4);

  MatRM da_all(steps, g4);
  Eigen::RowVectorXd dh = Eigen::RowVectorXd::Zero(units);
  Eigen::RowVectorXd dc = Eigen::RowVectorXd::Zero(units);
  for (std::size_t si = steps; si-- > 0;) {
    dh += dh_out.row(si);
    for (std::size_t u = 0; u < units; ++u) {
      double gi = cache.gates(si, u);
      double gf = cache.gates(si, units + u);
      double gg = cache.gates(si, 2 * units + u);
      double go = cache.gates(si, 3 * units + u);
      double hcv = cache.hc(si, u);
      double c_prev = si > 0 ? cache.c(si - 1, u) : 0.0;

      double dhc = dh(u) * go;
      double dcc = dc(u) + dhc * cell_act_grad_from_out(act, hcv);
      double dgo = dh(u) * hcv;
      double dgi = dcc * gg;
      double dgf = dcc * c_prev;
      double dgg = dcc * gi;

      da_all(si, u) = dgi * gi * (1.0 - gi);
      da_all(si, units + u) = dgf * gf * (1.0 - gf);
      da_all(si, 2 * units + u) =
          dgg * (act == Act::kTanh ? 1.0 - gg * gg : 1.0);
      da_all(si, 3 * units + u) = dgo * go * (1.0 - go);
      dc(u) = dcc * gf;
    }
    // dh_prev via the recurrent weights, chained through the mask.
    Eigen::RowVectorXd dhm = da_all.row(si) * wh.transpose();
    for (std::size_t u = 0; u < units; ++u) {
      dh(u) = dhm(u) * cache.rec_mask[u];
    }
  }

  MapM gwx(dir.wx->grad.data(), in_dim, g4);
  gwx.noalias() += cache.xm.transpose() * da_all;
  MapM gwh(dir.wh->grad.data(), units, g4);
  gwh.noalias() += cache.hm.transpose() * da_all;
  MapM gb(dir.b->grad.data(), 1, g4);
  gb.noalias() += da_all.colwise().sum();

  MatRM dxm = da_all * wx.transpose();  // (S, I), processing order
  MatRM dx = MatRM::Zero(steps, in_dim);
  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t orig = cache.order[s];
    for (std::size_t i = 0; i < in_dim; ++i) {
      dx(orig, i) = dxm(s, i) * cache.in_mask[i];
    }
  }
  return dx;
}

}  // namespace

Var bilstm(Tape& t, Var x, const BiLstmSpec& spec) {
  const Tensor& xin = t.value(x);
  if (xin.rank() != 2) fail(ErrorKind::kUsage, "bilstm: x must be (steps, features)");
  if (spec.units == 0) fail(ErrorKind::kUsage, "bilstm: units must be > 0");
  std::size_t steps = xin.dim(0);
  std::size_t units = spec.units;

  auto fwd_cache = std::make_shared<DirectionCache>();
  auto bwd_cache = std::make_shared<DirectionCache>();
  MatRM h_fwd = run_direction(xin, spec.forward, units, spec.cell_activation,
                              spec.dropout, spec.recurrent_dropout, spec.training,
                              spec.mask_seed, false, *fwd_cache);
  MatRM h_bwd = run_direction(xin, spec.backward, units, spec.cell_activation,
                              spec.dropout, spec.recurrent_dropout, spec.training,
                              spec.mask_seed, true, *bwd_cache);

  Tensor out({steps, 2 * units});
  for (std::size_t s = 0; s < steps; ++s) {
    for (std::size_t u = 0; u < units; ++u) {
      out.at(s, u) = h_fwd(s, u);
      // h_bwd row s corresponds to original step steps-1-s.
      out.at(steps - 1 - s, units + u) = h_bwd(s, u);
    }
  }
  Var y = t.record(std::move(out));

  auto fdir = spec.forward;
  auto bdir = spec.backward;
  Act act = spec.cell_activation;
  t.record_backward([x, y, fdir, bdir, units, act, fwd_cache, bwd_cache,
                     steps](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    MatRM dh_fwd(steps, units), dh_bwd(steps, units);
    for (std::size_t s = 0; s < steps; ++s) {
      for (std::size_t u = 0; u < units; ++u) {
        dh_fwd(s, u) = gout.at(s, u);
        dh_bwd(s, u) = gout.at(steps - 1 - s, units + u);
      }
    }
    MatRM dx_f = backward_direction(*fwd_cache, fdir, units, act, dh_fwd);
    MatRM dx_b = backward_direction(*bwd_cache, bdir, units, act, dh_bwd);
    Tensor& gx = tp.grad(x);
    std::size_t in_dim = tp.value(x).dim(1);
    for (std::size_t s = 0; s < steps; ++s) {
      for (std::size_t i = 0; i < in_dim; ++i) {
        gx.at(s, i) += dx_f(s, i) + dx_b(s, i);
      }
    }
  });
  return y;
}

}  // namespace tvfx::nn
