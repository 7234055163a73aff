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

#include "tvfx/nn/ops.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <memory>

#include "tvfx/common.hpp"

namespace tvfx::nn {

namespace {

using MatRM = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapM = Eigen::Map<MatRM>;
using MapCM = Eigen::Map<const MatRM>;
using MapV = Eigen::Map<Eigen::VectorXd>;
using MapCV = Eigen::Map<const Eigen::VectorXd>;

std::size_t time_dim(const Tensor& x) { return x.dim(0); }


// Pads a (T,) or (T, 1) signal to length T + K - 1 with (K-1)/2 zeros on
// the left, so out[t] = sum_i xp[t + i] w[i] is 'same' cross-correlation.
std::vector<double> pad_signal(const double* x, std::size_t n, std::size_t width) {
  std::size_t pad_left = (width - 1) / 2;
  std::vector<double> xp(n + width - 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) xp[pad_left + i] = x[i];
  return xp;
}

// (T, K) matrix of sliding windows over the padded signal.
MatRM im2col(const std::vector<double>& xp, std::size_t t_len, std::size_t width) {
  MatRM cols(t_len, width);
  for (std::size_t t = 0; t < t_len; ++t) {
    for (std::size_t i = 0; i < width; ++i) {
      cols(t, i) = xp[t + i];
    }
  }
  return cols;
}

void check_1ch(const Tensor& x, const char* op) {
  bool ok = x.rank() == 1 || (x.rank() == 2 && x.dim(1) == 1) ||
            (x.rank() == 3 && x.dim(1) == 1 && x.dim(2) == 1);
  if (!ok) fail(ErrorKind::kUsage, std::string(op) + ": expected single-channel input");
}

}  // namespace

Var conv1d(Tape& t, Var x, Parameter& w) {
  const Tensor& xin = t.value(x);
  check_1ch(xin, "conv1d");
  if (w.value.rank() != 2) fail(ErrorKind::kUsage, "conv1d: W must be (filters, width)");
  std::size_t t_len = time_dim(xin);
  std::size_t filters = w.value.dim(0), width = w.value.dim(1);
  if (width > t_len) fail(ErrorKind::kUsage, "conv1d: kernel wider than signal");

  auto xp = std::make_shared<std::vector<double>>(
      pad_signal(xin.data(), t_len, width));
  MatRM cols = im2col(*xp, t_len, width);
  MapCM wm(w.value.data(), filters, width);

  Tensor out({t_len, filters});
  MapM om(out.data(), t_len, filters);
  om.noalias() = cols * wm.transpose();
  Var y = t.record(std::move(out));

  t.record_backward([x, y, xp, &w, t_len, filters, width](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    MapCM go(gout.data(), t_len, filters);
    MapCM wm2(w.value.data(), filters, width);
    // dW += dOut^T * cols
    MatRM cols2 = im2col(*xp, t_len, width);
    MapM gw(w.grad.data(), filters, width);
    gw.noalias() += go.transpose() * cols2;
    // dx: col2im of dOut * W
    MatRM dcols = go * wm2;
    Tensor& gx = tp.grad(x);
    std::size_t pad_left = (width - 1) / 2;
    for (std::size_t tt = 0; tt < t_len; ++tt) {
      for (std::size_t i = 0; i < width; ++i) {
        long long src = static_cast<long long>(tt + i) -
                        static_cast<long long>(pad_left);
        if (src >= 0 && src < static_cast<long long>(t_len)) {
          gx[static_cast<std::size_t>(src)] += dcols(tt, i);
        }
      }
    }
  });
  return y;
}

Var conv1d_local(Tape& t, Var x, Parameter& w) {
  const Tensor& xin = t.value(x);
  if (xin.rank() != 2) fail(ErrorKind::kUsage, "conv1d_local: x must be (time, channels)");
  std::size_t t_len = xin.dim(0), ch = xin.dim(1);
  if (w.value.rank() != 2 || w.value.dim(0) != ch) {
    fail(ErrorKind::kUsage, "conv1d_local: W must be (channels, width)");
  }
  std::size_t width = w.value.dim(1);
  std::size_t pad_left = (width - 1) / 2;

  // Padded copy, time-major (t, c); kernel transposed to (width, c) so the
  // channel loop is contiguous and vectorizes.
  auto xp = std::make_shared<std::vector<double>>((t_len + width - 1) * ch, 0.0);
  for (std::size_t tt = 0; tt < t_len; ++tt) {
    const double* src = xin.data() + tt * ch;
    double* dst = xp->data() + (tt + pad_left) * ch;
    for (std::size_t c = 0; c < ch; ++c) dst[c] = src[c];
  }
  std::vector<double> wt(width * ch);
  for (std::size_t c = 0; c < ch; ++c) {
    for (std::size_t i = 0; i < width; ++i) wt[i * ch + c] = w.value.at(c, i);
  }

  Tensor out({t_len, ch});
  for (std::size_t tt = 0; tt < t_len; ++tt) {
    double* o = out.data() + tt * ch;
    const double* base = xp->data() + tt * ch;
    for (std::size_t i = 0; i < width; ++i) {
      const double* xr = base + i * ch;
      const double* wr = wt.data() + i * ch;
      for (std::size_t c = 0; c < ch; ++c) o[c] += xr[c] * wr[c];
    }
  }
  Var y = t.record(std::move(out));

  t.record_backward([x, y, xp, &w, t_len, ch, width, pad_left](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    Tensor& gx = tp.grad(x);
    std::vector<double> gxp((t_len + width - 1) * ch, 0.0);
    std::vector<double> gwt(width * ch, 0.0);
    std::vector<double> wt2(width * ch);
    for (std::size_t c = 0; c < ch; ++c) {
      for (std::size_t i = 0; i < width; ++i) wt2[i * ch + c] = w.value.at(c, i);
    }
    for (std::size_t tt = 0; tt < t_len; ++tt) {
      const double* g = gout.data() + tt * ch;
      double* gbase = gxp.data() + tt * ch;
      const double* xbase = xp->data() + tt * ch;
      for (std::size_t i = 0; i < width; ++i) {
        double* gxr = gbase + i * ch;
        const double* xr = xbase + i * ch;
        const double* wr = wt2.data() + i * ch;
        double* gwr = gwt.data() + i * ch;
        for (std::size_t c = 0; c < ch; ++c) {
          gxr[c] += g[c] * wr[c];
          gwr[c] += g[c] * xr[c];
        }
      }
    }
    for (std::size_t c = 0; c < ch; ++c) {
      for (std::size_t i = 0; i < width; ++i) {
        w.grad.at(c, i) += gwt[i * ch + c];
      }
    }
    for (std::size_t tt = 0; tt < t_len; ++tt) {
      double* dst = gx.data() + tt * ch;
      const double* src = gxp.data() + (tt + pad_left) * ch;
      for (std::size_t c = 0; c < ch; ++c) dst[c] += src[c];
    }
  });
  return y;
}

namespace {

// out[s] = sum_{f,i} u[s - i + pad, f] W[f, i]: the adjoint of conv1d.
Tensor conv1d_adjoint_apply(const Tensor& u, const Tensor& w) {
  std::size_t t_len = u.dim(0), filters = u.dim(1);
  std::size_t width = w.dim(1);
  std::size_t pad_left = (width - 1) / 2;
  MapCM um(u.data(), t_len, filters);
  MapCM wm(w.data(), filters, width);
  MatRM dcols = um * wm;  // (T, K)
  Tensor out({t_len, 1});
  for (std::size_t tt = 0; tt < t_len; ++tt) {
    for (std::size_t i = 0; i < width; ++i) {
      long long src = static_cast<long long>(tt + i) -
                      static_cast<long long>(pad_left);
      if (src >= 0 && src < static_cast<long long>(t_len)) {
        out[static_cast<std::size_t>(src)] += dcols(tt, i);
      }
    }
  }
  return out;
}

// Forward conv with W (the adjoint of conv1d_adjoint_apply).
Tensor conv1d_apply(const Tensor& x, const Tensor& w) {
  std::size_t t_len = x.dim(0);
  std::size_t filters = w.dim(0), width = w.dim(1);
  auto xp = pad_signal(x.data(), t_len, width);
  MatRM cols = im2col(xp, t_len, width);
  MapCM wm(w.data(), filters, width);
  Tensor out({t_len, filters});
  MapM om(out.data(), t_len, filters);
  om.noalias() = cols * wm.transpose();
  return out;
}

}  // namespace

Var conv1d_transposed_tied(Tape& t, Var x, const Parameter& w) {
  const Tensor& xin = t.value(x);
  if (xin.rank() != 2 || xin.dim(1) != w.value.dim(0)) {
    fail(ErrorKind::kUsage, "conv1d_transposed_tied: x must be (time, filters)");
  }
  Var y = t.record(conv1d_adjoint_apply(xin, w.value));
  t.record_backward([x, y, &w](Tape& tp) {
    // d/dx of the adjoint is the forward convolution; W is tied and
    // frozen here, so no kernel gradient.
    const Tensor& gout = tp.grad(y);
    Tensor gslice({gout.dim(0)});
    for (std::size_t i = 0; i < gslice.size(); ++i) gslice[i] = gout[i];
    Tensor gx = conv1d_apply(gslice, w.value);
    tp.grad(x).add(gx);
  });
  return y;
}

Var max_pool_indexed(Tape& t, Var x, std::size_t window, PoolIndices* indices) {
  const Tensor& xin = t.value(x);
  if (xin.rank() != 2) fail(ErrorKind::kUsage, "max_pool_indexed: x must be (time, channels)");
  std::size_t t_len = xin.dim(0), ch = xin.dim(1);
  if (window == 0 || t_len % window != 0) {
    fail(ErrorKind::kUsage, "max_pool_indexed: window must divide time length");
  }
  std::size_t s_len = t_len / window;
  Tensor out({s_len, ch});
  auto idx = std::make_shared<std::vector<std::size_t>>(s_len * ch);
  for (std::size_t s = 0; s < s_len; ++s) {
    for (std::size_t c = 0; c < ch; ++c) {
      std::size_t best_t = s * window;
      double best = xin.at(best_t, c);
      for (std::size_t i = 1; i < window; ++i) {
        double v = xin.at(s * window + i, c);
        if (v > best) {  // strict: earliest index wins ties
          best = v;
          best_t = s * window + i;
        }
      }
      out.at(s, c) = best;
      (*idx)[s * ch + c] = best_t;
    }
  }
  if (indices != nullptr) {
    indices->window = window;
    indices->argmax = *idx;
  }
  Var y = t.record(std::move(out));
  t.record_backward([x, y, idx, s_len, ch](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    Tensor& gx = tp.grad(x);
    for (std::size_t s = 0; s < s_len; ++s) {
      for (std::size_t c = 0; c < ch; ++c) {
        gx.at((*idx)[s * ch + c], c) += gout.at(s, c);
      }
    }
  });
  return y;
}

Var unpool_indices(Tape& t, Var z, const PoolIndices& indices, std::size_t out_time) {
  const Tensor& zin = t.value(z);
  if (zin.rank() != 2) fail(ErrorKind::kUsage, "unpool_indices: z must be (s, channels)");
  std::size_t s_len = zin.dim(0), ch = zin.dim(1);
  if (indices.argmax.size() != s_len * ch) {
    fail(ErrorKind::kUsage, "unpool_indices: missing or mismatched indices");
  }
  auto idx = std::make_shared<std::vector<std::size_t>>(indices.argmax);
  Tensor out({out_time, ch});
  for (std::size_t s = 0; s < s_len; ++s) {
    for (std::size_t c = 0; c < ch; ++c) {
      out.at((*idx)[s * ch + c], c) = zin.at(s, c);
    }
  }
  Var y = t.record(std::move(out));
  t.record_backward([z, y, idx, s_len, ch](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    Tensor& gz = tp.grad(z);
    for (std::size_t s = 0; s < s_len; ++s) {
      for (std::size_t c = 0; c < ch; ++c) {
        gz.at(s, c) += gout.at((*idx)[s * ch + c], c);
      }
    }
  });
  return y;
}

Var unpool_interpolate(Tape& t, Var z, std::size_t out_time) {
  const Tensor& zin = t.value(z);
  if (zin.rank() != 2) fail(ErrorKind::kUsage, "unpool_interpolate: z must be (s, channels)");
  std::size_t s_len = zin.dim(0), ch = zin.dim(1);
  if (s_len < 1 || out_time < 2) {
    fail(ErrorKind::kUsage, "unpool_interpolate: need s >= 1, out_time >= 2");
  }
  double step = s_len > 1 ? static_cast<double>(s_len - 1) /
                                static_cast<double>(out_time - 1)
                          : 0.0;
  Tensor out({out_time, ch});
  for (std::size_t tt = 0; tt < out_time; ++tt) {
    double pos = step * static_cast<double>(tt);
    std::size_t i0 = std::min(static_cast<std::size_t>(pos), s_len - 1);
    std::size_t i1 = std::min(i0 + 1, s_len - 1);
    double frac = pos - static_cast<double>(i0);
    for (std::size_t c = 0; c < ch; ++c) {
      out.at(tt, c) = (1.0 - frac) * zin.at(i0, c) + frac * zin.at(i1, c);
    }
  }
  Var y = t.record(std::move(out));
  t.record_backward([z, y, s_len, ch, out_time, step](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    Tensor& gz = tp.grad(z);
    for (std::size_t tt = 0; tt < out_time; ++tt) {
      double pos = step * static_cast<double>(tt);
      std::size_t i0 = std::min(static_cast<std::size_t>(pos), s_len - 1);
      std::size_t i1 = std::min(i0 + 1, s_len - 1);
      double frac = pos - static_cast<double>(i0);
      for (std::size_t c = 0; c < ch; ++c) {
        gz.at(i0, c) += (1.0 - frac) * gout.at(tt, c);
        gz.at(i1, c) += frac * gout.at(tt, c);
      }
    }
  });
  return y;
}

Var dense(Tape& t, Var x, Parameter& w, Parameter& b) {
  const Tensor& xin = t.value(x);
  if (xin.rank() != 2) fail(ErrorKind::kUsage, "dense: x must be (time, in)");
  std::size_t t_len = xin.dim(0), in_dim = xin.dim(1);
  if (w.value.rank() != 2 || w.value.dim(0) != in_dim) {
    fail(ErrorKind::kUsage, "dense: W must be (in, out) matching x; got W " +
                                shape_string(w.value) + " for x " +
                                shape_string(xin));
  }
  std::size_t out_dim = w.value.dim(1);
  if (b.value.size() != out_dim) fail(ErrorKind::kUsage, "dense: bias size mismatch");

  Tensor out({t_len, out_dim});
  MapCM xm(xin.data(), t_len, in_dim);
  MapCM wm(w.value.data(), in_dim, out_dim);
  MapCV bv(b.value.data(), out_dim);
  MapM om(out.data(), t_len, out_dim);
  om.noalias() = xm * wm;
  om.rowwise() += bv.transpose();
  Var y = t.record(std::move(out));

  t.record_backward([x, y, &w, &b, t_len, in_dim, out_dim](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    const Tensor& xin2 = tp.value(x);
    MapCM go(gout.data(), t_len, out_dim);
    MapCM xm2(xin2.data(), t_len, in_dim);
    MapCM wm2(w.value.data(), in_dim, out_dim);
    MapM gw(w.grad.data(), in_dim, out_dim);
    gw.noalias() += xm2.transpose() * go;
    MapV gb(b.grad.data(), out_dim);
    gb.noalias() += go.colwise().sum().transpose();
    Tensor& gx = tp.grad(x);
    MapM gxm(gx.data(), t_len, in_dim);
    gxm.noalias() += go * wm2.transpose();
  });
  return y;
}

namespace {

double act_forward(Act kind, double v) {
  switch (kind) {
    case Act::kAbs: return std::abs(v);
    case Act::kSoftplus: return std::max(v, 0.0) + std::log1p(std::exp(-std::abs(v)));
    case Act::kTanh: return std::tanh(v);
    case Act::kRelu: return v > 0.0 ? v : 0.0;
    case Act::kSigmoid: return 1.0 / (1.0 + std::exp(-v));
    case Act::kIdentity: return v;
  }
  return v;
}

// Derivative expressed from input x and output y, whichever is cheaper.
double act_backward(Act kind, double x, double y) {
  switch (kind) {
    case Act::kAbs: return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0);
    case Act::kSoftplus: return 1.0 / (1.0 + std::exp(-x));
    case Act::kTanh: return 1.0 - y * y;
    case Act::kRelu: return x > 0.0 ? 1.0 : 0.0;
    case Act::kSigmoid: return y * (1.0 - y);
    case Act::kIdentity: return 1.0;
  }
  return 1.0;
}

}  // namespace

Var activation(Tape& t, Var x, Act kind) {
  const Tensor& xin = t.value(x);
  Tensor out(xin.shape());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = act_forward(kind, xin[i]);
  Var y = t.record(std::move(out));
  t.record_backward([x, y, kind](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    const Tensor& xin2 = tp.value(x);
    const Tensor& yout = tp.value(y);
    Tensor& gx = tp.grad(x);
    for (std::size_t i = 0; i < gx.size(); ++i) {
      gx[i] += gout[i] * act_backward(kind, xin2[i], yout[i]);
    }
  });
  return y;
}

Var add(Tape& t, Var a, Var b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  if (!av.same_shape(bv)) fail(ErrorKind::kUsage, "add: shape mismatch");
  Tensor out = av;
  out.add(bv);
  Var y = t.record(std::move(out));
  t.record_backward([a, b, y](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    tp.grad(a).add(gout);
    tp.grad(b).add(gout);
  });
  return y;
}

Var multiply(Tape& t, Var a, Var b) {
  const Tensor& av = t.value(a);
  const Tensor& bv = t.value(b);
  if (!av.same_shape(bv)) fail(ErrorKind::kUsage, "multiply: shape mismatch");
  Tensor out(av.shape());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = av[i] * bv[i];
  Var y = t.record(std::move(out));
  t.record_backward([a, b, y](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    const Tensor& av2 = tp.value(a);
    const Tensor& bv2 = tp.value(b);
    Tensor& ga = tp.grad(a);
    Tensor& gb = tp.grad(b);
    for (std::size_t i = 0; i < gout.size(); ++i) {
      ga[i] += gout[i] * bv2[i];
      gb[i] += gout[i] * av2[i];
    }
  });
  return y;
}

Var abs_mean_over_time(Tape& t, Var x) {
  const Tensor& xin = t.value(x);
  if (xin.rank() != 2) fail(ErrorKind::kUsage, "abs_mean_over_time: x must be (time, c)");
  std::size_t t_len = xin.dim(0), ch = xin.dim(1);
  Tensor out({1, ch});
  for (std::size_t tt = 0; tt < t_len; ++tt) {
    for (std::size_t c = 0; c < ch; ++c) out[c] += std::abs(xin.at(tt, c));
  }
  out.scale(1.0 / static_cast<double>(t_len));
  Var y = t.record(std::move(out));
  t.record_backward([x, y, t_len, ch](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    const Tensor& xin2 = tp.value(x);
    Tensor& gx = tp.grad(x);
    double inv = 1.0 / static_cast<double>(t_len);
    for (std::size_t tt = 0; tt < t_len; ++tt) {
      for (std::size_t c = 0; c < ch; ++c) {
        double v = xin2.at(tt, c);
        double s = v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0);
        gx.at(tt, c) += gout[c] * s * inv;
      }
    }
  });
  return y;
}

Var scale_channels(Tape& t, Var x, Var s) {
  const Tensor& xin = t.value(x);
  const Tensor& sv = t.value(s);
  if (xin.rank() != 2 || sv.rank() != 2 || sv.dim(0) != 1 ||
      sv.dim(1) != xin.dim(1)) {
    fail(ErrorKind::kUsage, "scale_channels: shapes must be (t, c) and (1, c)");
  }
  std::size_t t_len = xin.dim(0), ch = xin.dim(1);
  Tensor out({t_len, ch});
  for (std::size_t tt = 0; tt < t_len; ++tt) {
    for (std::size_t c = 0; c < ch; ++c) out.at(tt, c) = xin.at(tt, c) * sv[c];
  }
  Var y = t.record(std::move(out));
  t.record_backward([x, s, y, t_len, ch](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    const Tensor& xin2 = tp.value(x);
    const Tensor& sv2 = tp.value(s);
    Tensor& gx = tp.grad(x);
    Tensor& gs = tp.grad(s);
    for (std::size_t tt = 0; tt < t_len; ++tt) {
      for (std::size_t c = 0; c < ch; ++c) {
        gx.at(tt, c) += gout.at(tt, c) * sv2[c];
        gs[c] += gout.at(tt, c) * xin2.at(tt, c);
      }
    }
  });
  return y;
}

Var se_block(Tape& t, Var x, Parameter& w1, Parameter& b1, Parameter& w2,
             Parameter& b2) {
  Var m = abs_mean_over_time(t, x);
  Var h = activation(t, dense(t, m, w1, b1), Act::kRelu);
  Var s = activation(t, dense(t, h, w2, b2), Act::kSigmoid);
  return scale_channels(t, x, s);
}

Var concat_channels(Tape& t, const std::vector<Var>& frames) {
  if (frames.empty()) fail(ErrorKind::kUsage, "concat_channels: no inputs");
  std::size_t s_len = t.value(frames[0]).dim(0);
  std::size_t ch = t.value(frames[0]).dim(1);
  for (Var f : frames) {
    const Tensor& v = t.value(f);
    if (v.rank() != 2 || v.dim(0) != s_len || v.dim(1) != ch) {
      fail(ErrorKind::kUsage, "concat_channels: mismatched inputs");
    }
  }
  std::size_t j = frames.size();
  Tensor out({s_len, j * ch});
  for (std::size_t f = 0; f < j; ++f) {
    const Tensor& v = t.value(frames[f]);
    for (std::size_t s = 0; s < s_len; ++s) {
      for (std::size_t c = 0; c < ch; ++c) {
        out.at(s, f * ch + c) = v.at(s, c);
      }
    }
  }
  Var y = t.record(std::move(out));
  auto ins = frames;
  t.record_backward([ins, y, s_len, ch](Tape& tp) {
    const Tensor& gout = tp.grad(y);
    for (std::size_t f = 0; f < ins.size(); ++f) {
      Tensor& g = tp.grad(ins[f]);
      for (std::size_t s = 0; s < s_len; ++s) {
        for (std::size_t c = 0; c < ch; ++c) {
          g.at(s, c) += gout.at(s, f * ch + c);
        }
      }
    }
  });
  return y;
}

Var mae_loss(Tape& t, Var output, const Tensor& target) {
  const Tensor& o = t.value(output);
  if (!o.same_shape(target)) {
    fail(ErrorKind::kUsage, "mae_loss: output/target shape mismatch");
  }
  auto tgt = std::make_shared<Tensor>(target);
  double acc = 0.0;
  for (std::size_t i = 0; i < o.size(); ++i) acc += std::abs(o[i] - target[i]);
  Tensor out({1});
  out[0] = acc / static_cast<double>(o.size());
  Var y = t.record(std::move(out));
  t.record_backward([output, y, tgt](Tape& tp) {
    double g = tp.grad(y)[0];
    const Tensor& o2 = tp.value(output);
    Tensor& gx = tp.grad(output);
    double inv = g / static_cast<double>(o2.size());
    for (std::size_t i = 0; i < o2.size(); ++i) {
      double d = o2[i] - (*tgt)[i];
      gx[i] += d > 0.0 ? inv : (d < 0.0 ? -inv : 0.0);
    }
  });
  return y;
}

Var scale_sum(Tape& t, const std::vector<Var>& scalars, double scale) {
  if (scalars.empty()) fail(ErrorKind::kUsage, "scale_sum: no inputs");
  double acc = 0.0;
  for (Var v : scalars) {
    if (t.value(v).size() != 1) fail(ErrorKind::kUsage, "scale_sum: non-scalar input");
    acc += t.value(v)[0];
  }
  Tensor out({1});
  out[0] = acc * scale;
  Var y = t.record(std::move(out));
  auto ins = scalars;
  t.record_backward([ins, y, scale](Tape& tp) {
    double g = tp.grad(y)[0] * scale;
    for (Var v : ins) tp.grad(v)[0] += g;
  });
  return y;
}

Var add_l2_penalty(Tape& t, Var loss, Parameter& p, double lambda) {
  if (t.value(loss).size() != 1) fail(ErrorKind::kUsage, "add_l2_penalty: loss must be scalar");
  double acc = 0.0;
  for (std::size_t i = 0; i < p.value.size(); ++i) acc += p.value[i] * p.value[i];
  Tensor out({1});
  out[0] = t.value(loss)[0] + lambda * acc;
  Var y = t.record(std::move(out));
  t.record_backward([loss, y, &p, lambda](Tape& tp) {
    double g = tp.grad(y)[0];
    tp.grad(loss)[0] += g;
    for (std::size_t i = 0; i < p.value.size(); ++i) {
      p.grad[i] += g * 2.0 * lambda * p.value[i];
    }
  });
  return y;
}

}  // namespace tvfx::nn
