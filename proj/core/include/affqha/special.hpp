#pragma once

namespace affqha {

enum class WBranch { principal, lower };

// lambda(u) = u e^u / (e^u - 1), with lambda(0) = 1.
double lambda_eval(double u);
double lambda_derivative(double u);

// Solves w e^w = y on the requested branch by Halley iteration.
double lambert_w(WBranch branch, double y);

// For x < 0, the other solution of w e^w = x e^x (sigma(-1) = -1).
double sigma_eval(double x);

// Inverse of lambda on (0, inf): sigma(-r) + r, polished by one Newton step on lambda.
double lambda_inverse(double r);

// Orthonormal generalized Laguerre function
// sqrt(n!/Gamma(n+alpha+1)) r^((alpha+1)/2) e^(-r/2) L_n^alpha(r).
double laguerre_fn(int n, double alpha, double r);
double laguerre_poly(int n, double alpha, double r);

// Log-Gaussian normalized in L^2(R_+, dr/r).
double log_gaussian(double r, double mu, double sigma);

}  // namespace affqha
