#include "sphcox/fan.hpp"

#include <atomic>

#include "sphcox/errors.hpp"

namespace sphcox {

std::vector<std::vector<int>> enumerate_omissions(const std::vector<int>& dims) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur(dims.size(), 0);
    for (;;) {
        all.push_back(cur);
        // odometer increment, last block fastest
        int i = static_cast<int>(dims.size()) - 1;
        while (i >= 0) {
            if (++cur[i] < dims[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return all;  // single empty element when dims is empty
}

Vec iota_embed(const SphericalDatum& d, const Vec& u) {
    if (u.size() != static_cast<std::size_t>(d.weight_rank()))
        throw InputError("iota: vector dimension must be r+m");
    Vec out;
    out.reserve(d.total_block_size() + d.m);
    for (int i = 0; i < d.r; ++i)
        for (int j = 0; j < d.dims[i]; ++j) out.push_back(u[i]);
    for (int k = 0; k < d.m; ++k) out.push_back(u[d.r + k]);
    return out;
}

FreeLattice big_lattice(const SphericalDatum& d) {
    std::vector<std::string> labels;
    for (int i = 1; i <= d.r; ++i)
        for (int j = 1; j <= d.dims[i - 1]; ++j)
            labels.push_back("v[" + std::to_string(i) + "," + std::to_string(j) + "]");
    for (int k = 1; k <= d.m; ++k) labels.push_back("w" + std::to_string(k));
    return FreeLattice(d.total_block_size() + d.m, std::move(labels));
}

FreeLattice hat_lattice(const SphericalDatum& d, std::size_t n) {
    FreeLattice big = big_lattice(d);
    std::vector<std::string> labels = big.basis_labels;
    for (std::size_t l = 1; l <= n; ++l) labels.push_back("e" + std::to_string(l));
    return FreeLattice(big.rank + static_cast<int>(n), std::move(labels));
}

namespace {

// the v[i,j] generators kept by an omission choice, as basis vectors padded
// to `total` coordinates
std::vector<Vec> kept_block_vectors(const SphericalDatum& d, const std::vector<int>& omit,
                                    std::size_t total) {
    if (omit.size() != static_cast<std::size_t>(d.r))
        throw InputError("fan: omission choice must pick one index per block");
    std::vector<Vec> gens;
    int off = 0;
    for (int i = 0; i < d.r; ++i) {
        if (omit[i] < 0 || omit[i] >= d.dims[i])
            throw InputError("fan: omitted index out of range");
        for (int j = 0; j < d.dims[i]; ++j) {
            if (j == omit[i]) continue;
            Vec e(total, 0);
            e[off + j] = 1;
            gens.push_back(e);
        }
        off += d.dims[i];
    }
    return gens;
}

std::string omission_label(const std::vector<int>& omit) {
    std::string s = "{";
    for (std::size_t i = 0; i < omit.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(omit[i] + 1);
    }
    return s + "}";
}

} // namespace

Cone sigma_cone(const SphericalDatum& d, const Vec& u, const std::vector<int>& omit) {
    FreeLattice amb = big_lattice(d);
    std::vector<Vec> gens = kept_block_vectors(d, omit, amb.rank);
    gens.push_back(iota_embed(d, u));
    return cone_from_rays(amb, gens);
}

Cone sigma_hat_cone(const SphericalDatum& d, std::size_t ray_index, std::size_t n,
                    const std::vector<int>& omit) {
    if (ray_index >= n) throw InputError("fan: ray index out of range");
    FreeLattice amb = hat_lattice(d, n);
    std::vector<Vec> gens = kept_block_vectors(d, omit, amb.rank);
    Vec e(amb.rank, 0);
    e[d.total_block_size() + d.m + ray_index] = 1;
    gens.push_back(e);
    return cone_from_rays(amb, gens);
}

Fan fan_of_embedding(const SphericalDatum& d, const std::vector<Vec>& rays) {
    Fan fan;
    fan.ambient = big_lattice(d);
    std::vector<std::vector<int>> omissions = enumerate_omissions(d.dims);
    for (std::size_t l = 0; l < rays.size(); ++l)
        for (const auto& omit : omissions) {
            fan.max_cones.push_back(sigma_cone(d, rays[l], omit));
            fan.labels.push_back("sigma(ray " + std::to_string(l + 1) + ", omit " +
                                 omission_label(omit) + ")");
        }
    return fan;
}

Fan lifted_fan(const SphericalDatum& d, const std::vector<Vec>& rays) {
    Fan fan;
    fan.ambient = hat_lattice(d, rays.size());
    std::vector<std::vector<int>> omissions = enumerate_omissions(d.dims);
    for (std::size_t l = 0; l < rays.size(); ++l)
        for (const auto& omit : omissions) {
            fan.max_cones.push_back(sigma_hat_cone(d, l, rays.size(), omit));
            fan.labels.push_back("sigma-hat(ray " + std::to_string(l + 1) + ", omit " +
                                 omission_label(omit) + ")");
        }
    return fan;
}

FanCheckReport verify_fan(const Fan& fan, bool parallel) {
    FanCheckReport rep;
    const std::size_t n = fan.max_cones.size();
    rep.cone_count = n;
    if (n > 0) {
        rep.cone_dim = fan.max_cones[0].dim();
        for (const Cone& c : fan.max_cones)
            if (c.dim() != rep.cone_dim) {
                rep.cone_dim = -1;
                break;
            }
    }

    std::atomic<bool> internal_error{false};

    std::vector<unsigned char> smooth(n, 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long idx = 0; idx < static_cast<long long>(n); ++idx) {
        try {
            smooth[idx] = is_smooth_cone(fan.max_cones[idx]) ? 1 : 0;
        } catch (...) {
            internal_error = true;
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<unsigned char> pair_ok(pairs.size(), 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long k = 0; k < static_cast<long long>(pairs.size()); ++k) {
        try {
            pair_ok[k] = intersect_is_face(fan.max_cones[pairs[k].first],
                                           fan.max_cones[pairs[k].second])
                             .first
                             ? 1
                             : 0;
        } catch (...) {
            internal_error = true;
        }
    }

    if (internal_error)
        throw MathError("fan verification failed with an internal cone error");

    for (std::size_t i = 0; i < n; ++i)
        if (!smooth[i]) rep.non_smooth.push_back(i);
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (!pair_ok[k]) rep.bad_pairs.push_back(pairs[k]);
    return rep;
}

} // namespace sphcox
