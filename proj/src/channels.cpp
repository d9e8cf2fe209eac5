#include "nqs/channels.hpp"

#include <cmath>
#include <stdexcept>

#include "nqs/numerics/linalg.hpp"

namespace nqs {

namespace {

void require_positive(double v, const char* name)
{
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be positive and finite");
}

void require_time(double t)
{
    if (!(t >= 0.0) || !std::isfinite(t)) throw std::invalid_argument("time must be non-negative and finite");
}

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

AdParams::AdParams(double g_, double gamma_) : g(g_), gamma(gamma_)
{
    require_positive(g, "AD line width g");
    require_positive(gamma, "AD coupling gamma");
}

RtnParams::RtnParams(double b_, double gamma_rtn_) : b(b_), gamma_rtn(gamma_rtn_)
{
    require_positive(b, "RTN coupling b");
    require_positive(gamma_rtn, "RTN fluctuation rate gamma_rtn");
}

Depolarizing::Depolarizing(double p_) : p(p_)
{
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarizing p must lie in [0,1]");
}

double ad_lambda(const AdParams& params, double t)
{
    require_time(t);
    const double g = params.g;
    const double disc = g * (g - 2.0 * params.gamma);
    // h = e^{-gt/2} ((g/l) sinh(lt/2) + cosh(lt/2)), lambda = 1 - h^2
    double h;
    if (disc > 0.0) {
        // written with decaying exponentials only, so large t cannot overflow
        const double l = std::sqrt(disc);
        h = 0.5 * ((1.0 + g / l) * std::exp((l - g) * t / 2.0) + (1.0 - g / l) * std::exp(-(l + g) * t / 2.0));
    } else if (disc < 0.0) {
        const double l = std::sqrt(-disc);
        h = std::exp(-g * t / 2.0) * ((g / l) * std::sin(l * t / 2.0) + std::cos(l * t / 2.0));
    } else {
        h = std::exp(-g * t / 2.0) * (1.0 + g * t / 2.0);
    }
    return clamp01(1.0 - h * h);
}

double rtn_kernel(const RtnParams& params, double t)
{
    require_time(t);
    const double gam = params.gamma_rtn;
    const double r = 2.0 * params.b / gam;
    const double zeta2 = r * r - 1.0;
    double v;
    if (zeta2 > 0.0) {
        const double z = std::sqrt(zeta2);
        v = std::exp(-gam * t) * (std::cos(z * gam * t) + std::sin(z * gam * t) / z);
    } else if (zeta2 < 0.0) {
        const double k = std::sqrt(-zeta2);
        v = 0.5 * ((1.0 + 1.0 / k) * std::exp((k - 1.0) * gam * t) + (1.0 - 1.0 / k) * std::exp(-(k + 1.0) * gam * t));
    } else {
        v = std::exp(-gam * t) * (1.0 + gam * t);
    }
    return std::min(1.0, std::max(-1.0, v));
}

double completeness_residual(const std::vector<ComplexMatrix>& ops)
{
    if (ops.empty()) throw std::invalid_argument("Kraus set is empty");
    const std::size_t n = ops.front().cols();
    ComplexMatrix s(n, n);
    for (const auto& k : ops) s += k.adjoint() * k;
    return max_abs_diff(s, ComplexMatrix::identity(n));
}

KrausSet::KrausSet(std::size_t dim, std::vector<ComplexMatrix> operators) : dim_(dim), ops_(std::move(operators))
{
    for (const auto& k : ops_)
        if (k.rows() != dim_ || k.cols() != dim_) throw std::invalid_argument("KrausSet: operator has the wrong shape");
    residual_ = nqs::completeness_residual(ops_);
    if (residual_ > kCompletenessTol)
        throw std::invalid_argument("KrausSet: completeness residual " + std::to_string(residual_) + " too large");
}

namespace {

ComplexMatrix single_entry(std::size_t n, std::size_t r, std::size_t c, double v)
{
    ComplexMatrix m(n, n);
    m(r, c) = v;
    return m;
}

KrausSet ad_kraus(double lam, int dim)
{
    const double keep = std::sqrt(1.0 - lam), jump = std::sqrt(lam);
    if (dim == 2) return KrausSet(2, {ComplexMatrix::diagonal({1.0, keep}), single_entry(2, 0, 1, jump)});
    return KrausSet(3, {ComplexMatrix::diagonal({1.0, keep, keep}), single_entry(3, 0, 1, jump),
                        single_entry(3, 0, 2, jump)});
}

KrausSet rtn_kraus(double kernel, int dim)
{
    const double a = std::sqrt((1.0 + kernel) / 2.0), b = std::sqrt((1.0 - kernel) / 2.0);
    if (dim == 2) return KrausSet(2, {ComplexMatrix::identity(2) * Complex(a), pauli::Z() * Complex(b)});
    return KrausSet(3, {ComplexMatrix::identity(3) * Complex(a), ComplexMatrix::diagonal({b, 0.0, -b}),
                        ComplexMatrix::diagonal({0.0, b, 0.0})});
}

}  // namespace

KrausSet kraus_set(const ChannelSpec& spec, double t, int dim)
{
    if (dim != 2 && dim != 3) throw std::invalid_argument("kraus_set: dimension must be 2 or 3");
    require_time(t);
    return std::visit(
        [&](const auto& ch) -> KrausSet {
            using T = std::decay_t<decltype(ch)>;
            if constexpr (std::is_same_v<T, Identity>) {
                return KrausSet(dim, {ComplexMatrix::identity(dim)});
            } else if constexpr (std::is_same_v<T, Depolarizing>) {
                if (dim != 2) throw std::invalid_argument("kraus_set: depolarizing channel is defined for qubits only");
                const double a = std::sqrt(1.0 - ch.p), b = std::sqrt(ch.p / 3.0);
                return KrausSet(2, {pauli::I() * Complex(a), pauli::X() * Complex(b), pauli::Y() * Complex(b),
                                    pauli::Z() * Complex(b)});
            } else if constexpr (std::is_same_v<T, AmplitudeDamping>) {
                return ad_kraus(ad_lambda(ch.params, t), dim);
            } else {
                return rtn_kraus(rtn_kernel(ch.params, t), dim);
            }
        },
        spec);
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& ks, Locality locality)
{
    const auto& ops = ks.operators();
    ComplexMatrix out(rho.dim(), rho.dim());
    if (locality == Locality::Single) {
        if (rho.dim() != ks.dim()) throw std::invalid_argument("apply_channel: state and channel dimensions differ");
        for (const auto& k : ops) out += sandwich(k, rho.matrix());
    } else {
        if (rho.dim() != ks.dim() * ks.dim())
            throw std::invalid_argument("apply_channel: two-local action needs a state of dimension dim^2");
        for (const auto& ki : ops)
            for (const auto& kj : ops) out += sandwich(tensor(ki, kj), rho.matrix());
    }
    return DensityMatrix(out);
}

Regime regime(const ChannelSpec& spec)
{
    if (const auto* ad = std::get_if<AmplitudeDamping>(&spec))
        return 2.0 * ad->params.gamma > ad->params.g ? Regime::NonMarkovian : Regime::Markovian;
    if (const auto* rtn = std::get_if<TelegraphNoise>(&spec)) {
        const double r = 2.0 * rtn->params.b / rtn->params.gamma_rtn;
        return r * r > 1.0 ? Regime::NonMarkovian : Regime::Markovian;
    }
    return Regime::Markovian;
}

std::string regime_name(Regime r)
{
    return r == Regime::NonMarkovian ? "non-markovian" : "markovian";
}

nlohmann::json channel_to_json(const ChannelSpec& spec)
{
    return std::visit(
        [](const auto& ch) -> nlohmann::json {
            using T = std::decay_t<decltype(ch)>;
            if constexpr (std::is_same_v<T, Identity>) return {{"type", "none"}};
            else if constexpr (std::is_same_v<T, Depolarizing>) return {{"type", "depolarizing"}, {"p", ch.p}};
            else if constexpr (std::is_same_v<T, AmplitudeDamping>)
                return {{"type", "ad"}, {"g", ch.params.g}, {"gamma", ch.params.gamma}};
            else return {{"type", "rtn"}, {"b", ch.params.b}, {"gamma_rtn", ch.params.gamma_rtn}};
        },
        spec);
}

namespace {

double required_number(const nlohmann::json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number())
        throw std::invalid_argument(std::string("channel spec needs numeric field '") + key + "'");
    return j.at(key).get<double>();
}

}  // namespace

ChannelSpec channel_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw std::invalid_argument("channel spec must be an object with a string 'type'");
    const std::string type = j.at("type").get<std::string>();
    if (type == "none") return Identity{};
    if (type == "depolarizing") return Depolarizing(required_number(j, "p"));
    if (type == "ad") return AmplitudeDamping{AdParams(required_number(j, "g"), required_number(j, "gamma"))};
    if (type == "rtn") return TelegraphNoise{RtnParams(required_number(j, "b"), required_number(j, "gamma_rtn"))};
    throw std::invalid_argument("unknown channel type '" + type + "' (valid: none, depolarizing, ad, rtn)");
}

std::string channel_name(const ChannelSpec& spec)
{
    return channel_to_json(spec).at("type").get<std::string>();
}

}  // namespace nqs
