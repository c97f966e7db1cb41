#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "driftrec/image.hpp"

namespace driftrec {

/// Value written to CSV in place of an infinite PSNR.
inline constexpr double kPsnrCap = 99.0;
/// CSV reports BEF multiplied by this factor.
inline constexpr double kBefReportScale = 1e4;

double mse(const ImageField& ref, const ImageField& test);
/// 10 log10(1 / MSE); +inf for identical inputs.
double psnr(const ImageField& ref, const ImageField& test);

/// BT.601 luma of a 3-channel image; 1-channel images are returned as is.
ImageField luma(const ImageField& img);

struct SsimOptions {
  std::size_t window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double data_range = 1.0;
};

/// Mean local SSIM of the luma planes over all valid window positions.
double ssim(const ImageField& ref, const ImageField& test, const SsimOptions& opt = {});

struct BlockinessTerms {
  double d_boundary = 0.0;      // mean squared step across 8x8 block edges
  double d_nonboundary = 0.0;   // same for pairs inside blocks
  double eta = 0.0;
  double bef = 0.0;
};

/// Blocking-effect factor on luma, 8x8 grid anchored at (0, 0). Needs H, W >= 16.
BlockinessTerms blockiness(const ImageField& img);
double bef(const ImageField& img);
/// 10 log10(1 / (MSE + BEF(test))).
double psnr_b(const ImageField& ref, const ImageField& test);

struct MetricsRow {
  std::string image;
  int qf = 0;
  std::string method;
  double psnr = 0.0;
  double ssim = 0.0;
  double psnr_b = 0.0;
  double bef = 0.0;
  double mse = 0.0;
};

MetricsRow measure(const ImageField& ref, const ImageField& test);

struct MetricsAggregate {
  int qf = 0;
  std::string method;
  std::size_t count = 0;
  double psnr = 0.0;  // means; infinite PSNR enters as kPsnrCap
  double ssim = 0.0;
  double psnr_b = 0.0;
  double bef = 0.0;
  double mse = 0.0;
};

struct MetricsReport {
  std::vector<MetricsRow> rows;

  /// Means grouped by (qf, method) in first-appearance order.
  std::vector<MetricsAggregate> aggregates() const;
  /// Columns: image,qf,method,ssim,psnr,psnr_b,bef_x1e4,mse
  void write_csv(std::ostream& os) const;
  void write_summary_csv(std::ostream& os) const;
};

}  // namespace driftrec
