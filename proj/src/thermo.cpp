#include "qentropy/thermo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qentropy::thermo {

namespace {

constexpr double kGibbsWindow = 1e-6;  // orders routed to the BG limit

double power_sum(const std::vector<double>& probs, double alpha) {
    double s = 0.0;
    for (double p : probs)
        if (p > 0.0) s += std::pow(p, alpha);
    return s;
}

double shannon_sum(const std::vector<double>& probs) {
    double s = 0.0;
    for (double p : probs)
        if (p > 0.0) s -= p * std::log(p);
    return s;
}

}  // namespace

void validate(const DiscreteDistribution& p) {
    if (p.probs.empty())
        throw std::domain_error("distribution: no events");
    double sum = 0.0;
    for (double v : p.probs) {
        if (!(v >= 0.0 && v <= 1.0))
            throw std::domain_error(
                "distribution: probabilities must lie in [0, 1]");
        sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw std::domain_error("distribution: probabilities must sum to 1");
}

void validate(const LevelSystem& ls) {
    if (ls.energies.empty())
        throw std::domain_error("level system: no levels");
    for (double e : ls.energies)
        if (!std::isfinite(e))
            throw std::domain_error("level system: energies must be finite");
    if (!(ls.temperature > 0.0) || !std::isfinite(ls.temperature))
        throw std::domain_error("level system: temperature must be positive");
}

double discrete_entropy(const DiscreteDistribution& p,
                        entropy::EntropyKind kind, double alpha) {
    validate(p);
    if (kind == entropy::EntropyKind::Shannon) return shannon_sum(p.probs);
    if (kind == entropy::EntropyKind::Onicescu) return power_sum(p.probs, 2.0);
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("discrete_entropy: order must be positive");
    if (std::fabs(alpha - 1.0) < 1e-9) return shannon_sum(p.probs);
    const double s = power_sum(p.probs, alpha);
    if (kind == entropy::EntropyKind::Renyi)
        return std::log(s) / (1.0 - alpha);
    return (1.0 - s) / (alpha - 1.0);
}

AdditivityReport additivity_check(const DiscreteDistribution& f,
                                  const DiscreteDistribution& g,
                                  double alpha) {
    validate(f);
    validate(g);
    DiscreteDistribution fg;
    fg.probs.reserve(f.probs.size() * g.probs.size());
    for (double pf : f.probs)
        for (double pg : g.probs) fg.probs.push_back(pf * pg);

    using entropy::EntropyKind;
    AdditivityReport rep;
    rep.alpha = alpha;
    const double rf = discrete_entropy(f, EntropyKind::Renyi, alpha);
    const double rg = discrete_entropy(g, EntropyKind::Renyi, alpha);
    rep.renyi_gap =
        discrete_entropy(fg, EntropyKind::Renyi, alpha) - (rf + rg);
    const double tf = discrete_entropy(f, EntropyKind::Tsallis, alpha);
    const double tg = discrete_entropy(g, EntropyKind::Tsallis, alpha);
    rep.tsallis_gap = discrete_entropy(fg, EntropyKind::Tsallis, alpha) -
                      (tf + tg + (1.0 - alpha) * tf * tg);
    const double sf = discrete_entropy(f, EntropyKind::Shannon, 1.0);
    const double sg = discrete_entropy(g, EntropyKind::Shannon, 1.0);
    rep.shannon_gap =
        discrete_entropy(fg, EntropyKind::Shannon, 1.0) - (sf + sg);
    rep.additive = std::fabs(rep.renyi_gap) <= 1e-10 &&
                   std::fabs(rep.tsallis_gap) <= 1e-10 &&
                   std::fabs(rep.shannon_gap) <= 1e-10;
    return rep;
}

Equilibrium tsallis_equilibrium(const LevelSystem& ls, double alpha) {
    validate(ls);
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw std::domain_error("tsallis_equilibrium: order must be positive");

    Equilibrium eq;
    if (std::fabs(alpha - 1.0) <= kGibbsWindow) {
        eq.dist = gibbs_distribution(ls.energies, ls.temperature);
        eq.partition = std::exp(log_partition(ls.energies, ls.temperature));
        eq.gibbs_path = true;
        eq.cutoff_applied = false;
        return eq;
    }

    const double u = alpha - 1.0;
    const std::size_t n = ls.energies.size();
    std::vector<double> lw(n, -std::numeric_limits<double>::infinity());
    bool cutoff = false;
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
        const double bracket = 1.0 - u * ls.energies[i] / ls.temperature;
        if (bracket > 0.0) {
            lw[i] = std::log(bracket) / u;
            any = true;
        } else {
            cutoff = true;
        }
    }
    if (!any)
        throw EmptySupport(
            "tsallis_equilibrium: every bracket is nonpositive");

    const double m = *std::max_element(lw.begin(), lw.end());
    double z = 0.0;
    eq.dist.probs.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::isfinite(lw[i])) {
            eq.dist.probs[i] = std::exp(lw[i] - m);
            z += eq.dist.probs[i];
        }
    }
    for (double& p : eq.dist.probs) p /= z;
    eq.partition = std::exp(m + std::log(z));
    eq.gibbs_path = false;
    eq.cutoff_applied = cutoff;
    return eq;
}

FreeEnergyReport renyi_free_energy_identity(
    const std::vector<double>& energies, double t1, double t2) {
    LevelSystem probe{energies, 1.0};
    validate(probe);
    if (!(t1 > 0.0) || !(t2 > 0.0) || t1 == t2)
        throw std::domain_error(
            "renyi_free_energy_identity: need two distinct positive "
            "temperatures");

    FreeEnergyReport rep;
    rep.alpha = t1 / t2;
    rep.lhs = discrete_entropy(gibbs_distribution(energies, t1),
                               entropy::EntropyKind::Renyi, rep.alpha);
    rep.rhs = (t2 * log_partition(energies, t2) -
               t1 * log_partition(energies, t1)) /
              (t2 - t1);
    rep.gap = rep.lhs - rep.rhs;
    return rep;
}

DiscreteDistribution gibbs_distribution(const std::vector<double>& energies,
                                        double temperature) {
    LevelSystem probe{energies, temperature};
    validate(probe);
    const double m = *std::min_element(energies.begin(), energies.end());
    DiscreteDistribution p;
    p.probs.reserve(energies.size());
    double z = 0.0;
    for (double e : energies) {
        const double w = std::exp(-(e - m) / temperature);
        p.probs.push_back(w);
        z += w;
    }
    for (double& w : p.probs) w /= z;
    return p;
}

double log_partition(const std::vector<double>& energies,
                     double temperature) {
    LevelSystem probe{energies, temperature};
    validate(probe);
    const double m = *std::min_element(energies.begin(), energies.end());
    double z = 0.0;
    for (double e : energies) z += std::exp(-(e - m) / temperature);
    return -m / temperature + std::log(z);
}

}  // namespace qentropy::thermo
