#include "ramlift/oracle.hpp"

#include <stdexcept>

namespace ramlift {

OracleConfig OracleConfig::from_pipeline(const PipelineConfig& cfg, const PipelineResult& result) {
    if (!result.success)
        throw std::invalid_argument("oracle config needs a successful pipeline run");
    OracleConfig oc;
    oc.base_model = cfg.base_model;
    oc.n0 = cfg.n0;
    oc.d = cfg.d;
    oc.t = result.t;
    oc.perm_mode = cfg.perm_mode;
    oc.base_seed = derive_seed(cfg.s1, "base", result.seeds.base_attempt);
    oc.sign_seed = derive_seed(cfg.s2, "signs", result.seeds.sign_attempt);
    oc.small_bias_signs = cfg.small_bias_signs;
    oc.bits_m = cfg.bits_m;
    oc.bits_k = cfg.bits_k;
    oc.fresh_seed_per_stage = cfg.fresh_seed_per_stage;
    return oc;
}

namespace {

SignSource make_source(const OracleConfig& cfg, const SeedBytes& seed) {
    if (cfg.small_bias_signs) return SignSource::small_bias(seed, cfg.bits_m, cfg.bits_k);
    return SignSource::uniform_hash(seed);
}

} // namespace

NeighborOracle::NeighborOracle(OracleConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.d < 3) throw std::invalid_argument("degree must be at least 3");
    if (cfg_.base_model == GraphModel::configuration) {
        // the same derivation chain sample_configuration uses
        const SeedBytes trial_seed = cfg_.base_seed;
        config_pi_.emplace(derive_seed(trial_seed, "config-perm"),
                           static_cast<std::uint64_t>(cfg_.n0) * cfg_.d, cfg_.perm_mode);
    } else {
        if (cfg_.n0 % (cfg_.d + 1) != 0)
            throw std::invalid_argument("lift-of-complete base needs (d+1) | n0");
        lift_pis_ = lift_families(cfg_.base_seed, cfg_.d, cfg_.n0 / (cfg_.d + 1), cfg_.perm_mode);
    }
    if (cfg_.fresh_seed_per_stage) {
        for (std::uint32_t stage = 1; stage <= cfg_.t; ++stage)
            stage_signs_.push_back(make_source(cfg_, derive_seed(cfg_.sign_seed, "stage", stage)));
    } else {
        shared_signs_ = make_source(cfg_, cfg_.sign_seed);
    }
}

LiftedVertexLabel NeighborOracle::decode(std::uint64_t id) const {
    if (id >= vertex_count()) throw std::out_of_range("vertex id out of range");
    LiftedVertexLabel label;
    const auto id0 = static_cast<std::uint32_t>(id % cfg_.n0);
    label.lift_bits = id / cfg_.n0;
    if (cfg_.base_model == GraphModel::lift_of_complete) {
        label.base_vertex = id0 % (cfg_.d + 1);
        label.copy = id0 / (cfg_.d + 1);
    } else {
        label.base_vertex = id0;
        label.copy = 0;
    }
    return label;
}

std::uint64_t NeighborOracle::encode(const LiftedVertexLabel& label) const {
    std::uint32_t id0;
    if (cfg_.base_model == GraphModel::lift_of_complete) {
        if (label.base_vertex > cfg_.d) throw std::out_of_range("base vertex out of range");
        id0 = label.base_vertex + (cfg_.d + 1) * label.copy;
    } else {
        if (label.copy != 0) throw std::out_of_range("configuration base has no copy coordinate");
        id0 = label.base_vertex;
    }
    if (id0 >= cfg_.n0) throw std::out_of_range("base id out of range");
    if (cfg_.t < 64 && (label.lift_bits >> cfg_.t) != 0)
        throw std::out_of_range("lift bits out of range");
    return id0 + static_cast<std::uint64_t>(cfg_.n0) * label.lift_bits;
}

std::vector<NeighborOracle::Entry> NeighborOracle::base_neighbors(std::uint32_t v0) const {
    std::vector<Entry> out;
    out.reserve(cfg_.d);
    if (cfg_.base_model == GraphModel::configuration) {
        for (std::uint32_t p = 0; p < cfg_.d; ++p) {
            const std::uint64_t h = static_cast<std::uint64_t>(v0) * cfg_.d + p;
            const std::uint64_t pos = config_pi_->inverse(h);
            const std::uint64_t partner = config_pi_->forward(pos ^ 1);
            out.push_back({partner / cfg_.d, pos / 2});
        }
    } else {
        const std::uint32_t base = cfg_.d + 1;
        const std::uint32_t n_lift = cfg_.n0 / base;
        const std::uint32_t u = v0 % base;
        const std::uint32_t a = v0 / base;
        for (std::uint32_t w = 0; w < base; ++w) {
            if (w == u) continue;
            std::uint32_t i, j;  // instance coordinate and neighbor block
            if (u < w) {
                i = a;
                j = static_cast<std::uint32_t>(
                    lift_pis_[complete_edge_index(cfg_.d, u, w)].forward(a));
            } else {
                i = static_cast<std::uint32_t>(
                    lift_pis_[complete_edge_index(cfg_.d, w, u)].inverse(a));
                j = i;
            }
            const std::uint32_t neighbor = w + base * (u < w ? j : i);
            const std::uint32_t idx = complete_edge_index(cfg_.d, std::min(u, w), std::max(u, w));
            out.push_back({neighbor, static_cast<std::uint64_t>(idx) * n_lift + i});
        }
    }
    return out;
}

int NeighborOracle::stage_sign(std::uint32_t stage, std::uint64_t edge_id) const {
    if (cfg_.fresh_seed_per_stage) return stage_signs_[stage - 1].at(edge_id);
    return shared_signs_->at(edge_id);
}

std::vector<std::uint64_t> NeighborOracle::neighbors(std::uint64_t id) const {
    if (id >= vertex_count()) throw std::out_of_range("vertex id out of range");
    const std::uint64_t x = id / cfg_.n0;
    std::uint64_t u_cur = id % cfg_.n0;
    std::uint64_t n_cur = cfg_.n0;
    std::uint64_t m_cur = static_cast<std::uint64_t>(cfg_.n0) * cfg_.d / 2;

    std::vector<Entry> entries = base_neighbors(static_cast<std::uint32_t>(u_cur));
    for (std::uint32_t stage = 1; stage <= cfg_.t; ++stage) {
        const std::uint64_t xs = (x >> (stage - 1)) & 1;
        for (Entry& entry : entries) {
            const int sign = stage_sign(stage, entry.edge);
            const std::uint64_t ys = sign > 0 ? xs : 1 - xs;
            const std::uint64_t copy_bit = u_cur < entry.vertex ? xs : ys;
            entry.vertex += n_cur * ys;
            entry.edge += m_cur * copy_bit;
        }
        u_cur += n_cur * xs;
        n_cur *= 2;
        m_cur *= 2;
    }

    std::vector<std::uint64_t> out;
    out.reserve(entries.size());
    for (const Entry& e : entries) out.push_back(e.vertex);
    return out;
}

std::uint64_t NeighborOracle::neighbor_by_port(std::uint64_t id, std::uint32_t port) const {
    if (port >= cfg_.d) throw std::out_of_range("port out of range");
    return neighbors(id)[port];
}

} // namespace ramlift
