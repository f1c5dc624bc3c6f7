#pragma once
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rmt/painleve.hpp"

namespace rmt {

enum class ZerosFormat { PlainHeights, BaseOffset };

// Heights are base + offset. The base is an exact integer kept as text (it can
// exceed 2^64); arithmetic uses offsets only, so the base never enters
// differences.
struct ZerosDataset {
    std::string base_digits = "0";
    long double base = 0.0L;
    std::vector<double> offsets;  // strictly increasing
    std::optional<long long> start_index;

    std::size_t count() const { return offsets.size(); }
    long double first_height() const {
        return base + (offsets.empty() ? 0.0L : offsets.front());
    }
};

ZerosDataset load_zeros(const std::filesystem::path& path, ZerosFormat format);

struct SourceMeta {
    bool thinned = false;
    std::uint64_t seed = 0;
    double xi_effective = 1.0;
};

struct UnfoldedSequence {
    std::vector<double> points;  // increasing, unit mean density before thinning
    double rho_bar = 0.0;
    long double first_height = 0.0L;
    SourceMeta meta;
};

UnfoldedSequence unfold(const ZerosDataset& ds);

// counter-based keyed generator: decision for a point depends only on
// (seed, original index), so thinning is order-independent and reproducible
double thin_u01(std::uint64_t seed, std::uint64_t index);
UnfoldedSequence thin(const UnfoldedSequence& seq, ThinningParam xi,
                      std::uint64_t seed);

struct EmpiricalCurve {
    std::vector<double> bin_edges;    // size nbins + 1
    std::vector<double> values;       // counts / (n_ref * bin_width)
    std::vector<long long> counts;
    long long n_ref = 0;
    double bin_width = 0.0;
    bool coverage_warning = false;
};

// Streaming accumulators (shared by the in-memory API and the CLI).
class TwoPointAccumulator {
  public:
    TwoPointAccumulator(double s_max, double bin_width, int window,
                        double rescale_factor = 1.0);
    void feed(double point);
    EmpiricalCurve finish(double mean_spacing_hint) const;

  private:
    double s_max_, bin_width_, rescale_;
    int window_;
    std::vector<double> ring_;
    std::uint64_t seen_ = 0;
    std::vector<long long> counts_;
};

class NNSpacingAccumulator {
  public:
    NNSpacingAccumulator(double s_max, double bin_width, double rescale_factor = 1.0);
    void feed(double point);
    EmpiricalCurve finish() const;

  private:
    double s_max_, bin_width_, rescale_;
    bool have_prev_ = false;
    double prev_ = 0.0;
    std::uint64_t n_gaps_ = 0;
    std::vector<long long> counts_;
};

EmpiricalCurve empirical_two_point(const UnfoldedSequence& seq, double s_max = 10.0,
                                   double bin_width = 0.05, int window = 50,
                                   bool rescale_to_unit_density = false);

EmpiricalCurve empirical_nn_spacing(const UnfoldedSequence& seq, double s_max = 6.0,
                                    double bin_width = 0.02,
                                    bool rescale_to_unit_density = false);

struct TheoryParams {
    double Lambda = 1.57314;
    double Q_over_Lambda = 1.4720;
    double E = 0.0;
    double rho_bar = 0.0;
    double alpha = 1.0;
    double N_eff = 0.0;

    static TheoryParams for_height(long double E);
};

struct TwoPointTheory {
    double full = 0.0;
    double correction_only = 0.0;
};

// two-point prediction at separation s, evaluated with s -> s/xi
TwoPointTheory theory_two_point(const TheoryParams& params, ThinningParam xi,
                                double s);

struct ResidualReport {
    std::vector<double> residual;
    std::vector<double> standard_error;
    double max_abs_over_stderr = 0.0;
    double rms_residual = 0.0;
};

ResidualReport compare(const EmpiricalCurve& curve, std::span<const double> theory);

// intermediate points-file format used by the CLI (streamable)
void write_points_header(std::ostream& os, const UnfoldedSequence& seq);
struct PointsHeader {
    double rho_bar = 0.0;
    std::string e0_digits = "0";
    long double e0 = 0.0L;
    double xi_effective = 1.0;
    std::uint64_t seed = 0;
    bool thinned = false;
};
PointsHeader read_points_header(std::istream& is, long& line_no);
// calls fn(point, original_index) for each data line; returns count
std::uint64_t stream_points(std::istream& is, long& line_no,
                            const std::function<void(double, std::uint64_t)>& fn);

}  // namespace rmt
