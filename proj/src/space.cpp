#include "jk/space.hpp"

#include <map>
#include <mutex>

#include "jk/errors.hpp"

namespace jk {

TablePtr cached_table(const std::vector<std::string>& names)
{
    static std::mutex mu;
    static std::map<std::vector<std::string>, TablePtr> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(names);
    if (it != cache.end()) return it->second;
    TablePtr t = make_table(names);
    cache.emplace(names, t);
    return t;
}

TablePtr equivariant_table(int n)
{
    std::vector<std::string> names{"q"};
    for (int k = 1; k <= n; ++k) names.push_back(equivariant_name(k));
    return cached_table(names);
}

TablePtr q_table() { return cached_table({"q"}); }

SpaceDescriptor SpaceDescriptor::point()
{
    return SpaceDescriptor();
}

SpaceDescriptor SpaceDescriptor::projective(int n)
{
    if (n < 2) throw UsageError("projective space needs n >= 2");
    SpaceDescriptor s;
    s.kind_ = Kind::projective;
    s.dims_ = {1};
    s.n_ = n;
    return s;
}

SpaceDescriptor SpaceDescriptor::grassmannian(int r, int n)
{
    if (r < 1 || r > n) throw UsageError("grassmannian needs 1 <= r <= n");
    SpaceDescriptor s;
    s.kind_ = Kind::grassmannian;
    s.dims_ = {r};
    s.n_ = n;
    return s;
}

SpaceDescriptor SpaceDescriptor::flag(std::vector<int> dims, int n)
{
    if (dims.empty()) throw UsageError("flag needs at least one dimension");
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] <= (i == 0 ? 0 : dims[i - 1])) throw UsageError("flag dimensions must satisfy 0 < m_1 < ... < m_l");
    }
    if (dims.back() >= n) throw UsageError("flag dimensions must be < n");
    SpaceDescriptor s;
    s.kind_ = Kind::flag;
    s.dims_ = std::move(dims);
    s.n_ = n;
    return s;
}

SpaceDescriptor SpaceDescriptor::product(std::vector<SpaceDescriptor> parts)
{
    if (parts.empty()) throw UsageError("product needs at least one component");
    for (const auto& p : parts)
        if (p.kind_ == Kind::product) throw UsageError("nested products are not supported");
    SpaceDescriptor s;
    s.kind_ = Kind::product;
    s.parts_ = std::move(parts);
    return s;
}

SpaceDescriptor SpaceDescriptor::lagrangian_flag(int n)
{
    if (n < 1) throw UsageError("isotropic flag needs n >= 1");
    SpaceDescriptor s;
    s.kind_ = Kind::lagrangian_flag;
    s.dims_ = {n};
    s.n_ = 2 * n;
    return s;
}

SpaceDescriptor SpaceDescriptor::orthogonal_flag(int n, int ambient)
{
    if (n < 1 || (ambient != 2 * n && ambient != 2 * n + 1)) throw UsageError("orthogonal flag needs ambient 2n or 2n+1");
    SpaceDescriptor s;
    s.kind_ = Kind::orthogonal_flag;
    s.dims_ = {n};
    s.n_ = ambient;
    return s;
}

std::vector<int> SpaceDescriptor::level_sizes() const
{
    if (kind_ == Kind::product) {
        std::vector<int> out;
        for (const auto& p : parts_) {
            auto l = p.level_sizes();
            out.insert(out.end(), l.begin(), l.end());
        }
        return out;
    }
    return dims_;
}

TablePtr SpaceDescriptor::table() const
{
    std::vector<std::string> names{"q"};
    auto sizes = level_sizes();
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (int j = 1; j <= sizes[i]; ++j) names.push_back(line_bundle_name(static_cast<int>(i) + 1, j));
    return cached_table(names);
}

std::size_t SpaceDescriptor::var(int level, int index) const
{
    auto sizes = level_sizes();
    if (level < 1 || level > static_cast<int>(sizes.size())) throw UsageError("level out of range");
    if (index < 1 || index > sizes[level - 1]) throw UsageError("line bundle index out of range");
    std::size_t off = 1;
    for (int i = 0; i < level - 1; ++i) off += sizes[i];
    return off + static_cast<std::size_t>(index - 1);
}

std::vector<std::size_t> SpaceDescriptor::level_vars(int level) const
{
    auto sizes = level_sizes();
    if (level < 1 || level > static_cast<int>(sizes.size())) throw UsageError("level out of range");
    std::vector<std::size_t> out;
    for (int j = 1; j <= sizes[level - 1]; ++j) out.push_back(var(level, j));
    return out;
}

std::string SpaceDescriptor::kind_name() const
{
    switch (kind_) {
    case Kind::point: return "point";
    case Kind::projective: return "projective";
    case Kind::grassmannian: return "grassmannian";
    case Kind::flag: return "flag";
    case Kind::product: return "product";
    case Kind::lagrangian_flag: return "lagrangian_flag";
    case Kind::orthogonal_flag: return "orthogonal_flag";
    }
    return "?";
}

nlohmann::json SpaceDescriptor::to_json() const
{
    nlohmann::json j;
    j["kind"] = kind_name();
    if (kind_ == Kind::product) {
        j["components"] = nlohmann::json::array();
        for (const auto& p : parts_) j["components"].push_back(p.to_json());
        j["dims"] = level_sizes();
        j["n"] = nullptr;
    } else {
        j["dims"] = dims_;
        j["n"] = n_;
    }
    return j;
}

SpaceDescriptor SpaceDescriptor::from_json(const nlohmann::json& j)
{
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "point") return point();
    if (kind == "product") {
        std::vector<SpaceDescriptor> parts;
        for (const auto& c : j.at("components")) parts.push_back(from_json(c));
        return product(std::move(parts));
    }
    auto dims = j.at("dims").get<std::vector<int>>();
    int n = j.at("n").get<int>();
    if (kind == "projective") return projective(n);
    if (kind == "grassmannian") return grassmannian(dims.at(0), n);
    if (kind == "flag") return flag(std::move(dims), n);
    if (kind == "lagrangian_flag") return lagrangian_flag(dims.at(0));
    if (kind == "orthogonal_flag") return orthogonal_flag(dims.at(0), n);
    throw UsageError("unknown space kind '" + kind + "'");
}

} // namespace jk
