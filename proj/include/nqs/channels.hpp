#pragma once

#include <json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "nqs/numerics/density.hpp"

namespace nqs {

struct AdParams {
    double g;      // reservoir line width
    double gamma;  // coupling strength
    AdParams(double g_, double gamma_);
};

struct RtnParams {
    double b;          // coupling strength
    double gamma_rtn;  // fluctuation rate
    RtnParams(double b_, double gamma_rtn_);
};

struct Identity {};
struct Depolarizing {
    double p;
    explicit Depolarizing(double p_);
};
struct AmplitudeDamping {
    AdParams params;
};
struct TelegraphNoise {
    RtnParams params;
};

using ChannelSpec = std::variant<Identity, Depolarizing, AmplitudeDamping, TelegraphNoise>;

// Damping probability of the (non-)Markovian amplitude-damping channel.
double ad_lambda(const AdParams& params, double t);
// Memory kernel of random telegraph noise.
double rtn_kernel(const RtnParams& params, double t);

class KrausSet {
public:
    static constexpr double kCompletenessTol = 1e-10;

    // Throws when sum K^dagger K deviates from I by more than the tolerance.
    KrausSet(std::size_t dim, std::vector<ComplexMatrix> operators);

    std::size_t dim() const { return dim_; }
    const std::vector<ComplexMatrix>& operators() const { return ops_; }
    double completeness_residual() const { return residual_; }

private:
    std::size_t dim_;
    std::vector<ComplexMatrix> ops_;
    double residual_;
};

double completeness_residual(const std::vector<ComplexMatrix>& ops);

// Time is ignored by the identity and depolarizing channels.
KrausSet kraus_set(const ChannelSpec& spec, double t, int dim);

enum class Locality { Single, TwoLocal };

// TwoLocal applies the same single-qudit channel to both halves:
// sum_ij (K_i x K_j) rho (K_i x K_j)^dagger.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& ks, Locality locality);

enum class Regime { Markovian, NonMarkovian };

// AD: non-Markovian iff 2 gamma > g. RTN: non-Markovian iff (2b/gamma)^2 > 1.
// Identity and depolarizing count as Markovian.
Regime regime(const ChannelSpec& spec);
std::string regime_name(Regime r);

// {"type":"ad","g":..,"gamma":..}, {"type":"rtn","b":..,"gamma_rtn":..},
// {"type":"depolarizing","p":..}, {"type":"none"}
nlohmann::json channel_to_json(const ChannelSpec& spec);
ChannelSpec channel_from_json(const nlohmann::json& j);
std::string channel_name(const ChannelSpec& spec);

}  // namespace nqs
