//! Minimal dense layers with hand-derived gradients.
//!
//! Everything trainable exposes flat parameter indexing (`param_count` /
//! `get_param` / `set_param`) so tests can check every analytic gradient
//! against central finite differences.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// Probability floor used when taking logs of softmax outputs.
pub const LOG_FLOOR: f64 = 1e-12;

/// Dense affine layer, weights row-major `[out_dim × in_dim]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Linear {
    pub in_dim: usize,
    pub out_dim: usize,
    pub w: Vec<f64>,
    pub b: Vec<f64>,
}

/// Parameter gradients for one [`Linear`], same layout as the layer.
#[derive(Debug, Clone)]
pub struct LinearGrad {
    pub dw: Vec<f64>,
    pub db: Vec<f64>,
}

impl Linear {
    pub fn new_random(in_dim: usize, out_dim: usize, rng: &mut ChaCha8Rng) -> Linear {
        let scale = 1.0 / (in_dim as f64).sqrt();
        Linear {
            in_dim,
            out_dim,
            w: (0..in_dim * out_dim).map(|_| rng.random_range(-scale..scale)).collect(),
            b: vec![0.0; out_dim],
        }
    }

    pub fn zero_grad(&self) -> LinearGrad {
        LinearGrad { dw: vec![0.0; self.w.len()], db: vec![0.0; self.b.len()] }
    }

    pub fn forward(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.in_dim, "input dimension");
        (0..self.out_dim)
            .map(|o| {
                let row = &self.w[o * self.in_dim..(o + 1) * self.in_dim];
                row.iter().zip(x.iter()).map(|(w, xi)| w * xi).sum::<f64>() + self.b[o]
            })
            .collect()
    }

    /// Accumulate parameter gradients for one sample and return dL/dx.
    pub fn backward(&self, x: &[f64], dy: &[f64], grad: &mut LinearGrad) -> Vec<f64> {
        let mut dx = vec![0.0; self.in_dim];
        for o in 0..self.out_dim {
            grad.db[o] += dy[o];
            let row = &self.w[o * self.in_dim..(o + 1) * self.in_dim];
            let grow = &mut grad.dw[o * self.in_dim..(o + 1) * self.in_dim];
            for i in 0..self.in_dim {
                grow[i] += dy[o] * x[i];
                dx[i] += row[i] * dy[o];
            }
        }
        dx
    }

    /// Gradient-descent step: `p ← p − lr · g / scale`.
    pub fn apply(&mut self, grad: &LinearGrad, lr: f64, scale: f64) {
        for (w, g) in self.w.iter_mut().zip(grad.dw.iter()) {
            *w -= lr * g / scale;
        }
        for (b, g) in self.b.iter_mut().zip(grad.db.iter()) {
            *b -= lr * g / scale;
        }
    }

    pub fn param_count(&self) -> usize {
        self.w.len() + self.b.len()
    }

    pub fn get_param(&self, i: usize) -> f64 {
        if i < self.w.len() {
            self.w[i]
        } else {
            self.b[i - self.w.len()]
        }
    }

    pub fn set_param(&mut self, i: usize, v: f64) {
        if i < self.w.len() {
            self.w[i] = v;
        } else {
            self.b[i - self.w.len()] = v;
        }
    }

    pub fn grad_param(grad: &LinearGrad, i: usize) -> f64 {
        if i < grad.dw.len() {
            grad.dw[i]
        } else {
            grad.db[i - grad.dw.len()]
        }
    }
}

pub fn tanh_forward(z: &[f64]) -> Vec<f64> {
    z.iter().map(|v| v.tanh()).collect()
}

/// dL/dz given activations h = tanh(z) and dL/dh.
pub fn tanh_backward(h: &[f64], dh: &[f64]) -> Vec<f64> {
    h.iter().zip(dh.iter()).map(|(hi, di)| di * (1.0 - hi * hi)).collect()
}

/// Numerically-stable softmax; outputs sum to 1 and are each in (0, 1).
pub fn softmax(logits: &[f64]) -> Vec<f64> {
    let max = logits.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exps: Vec<f64> = logits.iter().map(|l| (l - max).exp()).collect();
    let total: f64 = exps.iter().sum();
    exps.iter().map(|e| e / total).collect()
}

/// Cross entropy of a predicted distribution against the true label:
/// `−ln p[label]`, with the probability clamped at `LOG_FLOOR` so a zero
/// never produces an infinite loss.
pub fn cross_entropy(predicted: &[f64], label: usize) -> f64 {
    -predicted[label].max(LOG_FLOOR).ln()
}

/// Gradient of `cross_entropy(softmax(z), label)` with respect to z.
pub fn softmax_ce_grad(probs: &[f64], label: usize) -> Vec<f64> {
    let mut d = probs.to_vec();
    d[label] -= 1.0;
    d
}

/// Two-layer softmax classifier (tanh hidden layer); also used as the
/// domain discriminator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SoftmaxMlp {
    pub hidden: Linear,
    pub output: Linear,
}

#[derive(Debug, Clone)]
pub struct SoftmaxMlpGrad {
    pub hidden: LinearGrad,
    pub output: LinearGrad,
}

impl SoftmaxMlp {
    pub fn new_random(
        in_dim: usize,
        hidden_dim: usize,
        out_dim: usize,
        rng: &mut ChaCha8Rng,
    ) -> SoftmaxMlp {
        SoftmaxMlp {
            hidden: Linear::new_random(in_dim, hidden_dim, rng),
            output: Linear::new_random(hidden_dim, out_dim, rng),
        }
    }

    pub fn zero_grad(&self) -> SoftmaxMlpGrad {
        SoftmaxMlpGrad { hidden: self.hidden.zero_grad(), output: self.output.zero_grad() }
    }

    pub fn forward(&self, x: &[f64]) -> Vec<f64> {
        let h = tanh_forward(&self.hidden.forward(x));
        softmax(&self.output.forward(&h))
    }

    /// Loss for one sample plus accumulated parameter gradients and dL/dx.
    pub fn backward(&self, x: &[f64], label: usize, grad: &mut SoftmaxMlpGrad) -> (f64, Vec<f64>) {
        let h = tanh_forward(&self.hidden.forward(x));
        let probs = softmax(&self.output.forward(&h));
        let loss = cross_entropy(&probs, label);
        let dlogits = softmax_ce_grad(&probs, label);
        let dh = self.output.backward(&h, &dlogits, &mut grad.output);
        let dz = tanh_backward(&h, &dh);
        let dx = self.hidden.backward(x, &dz, &mut grad.hidden);
        (loss, dx)
    }

    pub fn apply(&mut self, grad: &SoftmaxMlpGrad, lr: f64, scale: f64) {
        self.hidden.apply(&grad.hidden, lr, scale);
        self.output.apply(&grad.output, lr, scale);
    }

    pub fn param_count(&self) -> usize {
        self.hidden.param_count() + self.output.param_count()
    }

    pub fn get_param(&self, i: usize) -> f64 {
        let nh = self.hidden.param_count();
        if i < nh {
            self.hidden.get_param(i)
        } else {
            self.output.get_param(i - nh)
        }
    }

    pub fn set_param(&mut self, i: usize, v: f64) {
        let nh = self.hidden.param_count();
        if i < nh {
            self.hidden.set_param(i, v);
        } else {
            self.output.set_param(i - nh, v);
        }
    }

    pub fn grad_param(&self, grad: &SoftmaxMlpGrad, i: usize) -> f64 {
        let nh = self.hidden.param_count();
        if i < nh {
            Linear::grad_param(&grad.hidden, i)
        } else {
            Linear::grad_param(&grad.output, i - nh)
        }
    }
}
