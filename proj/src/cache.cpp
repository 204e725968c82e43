#include "cbt/cache.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "cbt/serialize.hpp"

namespace cbt {

namespace {

constexpr const char* kFormat = "cbt-gcb-cache";

ordered_json header() {
  ordered_json h;
  h["format"] = kFormat;
  h["version"] = GcbCache::kVersion;
  return h;
}

}  // namespace

std::string cache_record(const Context& ctx, Mode mode, const Partition& mu, const FockVector& g) {
  ordered_json j;
  j["k"] = ctx.k;
  j["l"] = ctx.l;
  j["mode"] = to_string(mode);
  j["mu"] = partition_to_json(mu);
  ordered_json terms = ordered_json::array();
  for (const auto& [la, p] : g.entries()) {
    ordered_json t;
    t["la"] = partition_to_json(la);
    t["p"] = poly_to_json(p);
    terms.push_back(std::move(t));
  }
  j["g"] = std::move(terms);
  return j.dump();
}

GcbCache::GcbCache(std::string path) : path_(std::move(path)) {
  if (!std::filesystem::exists(path_)) {
    std::ofstream out(path_);
    if (!out) throw std::runtime_error("cannot create cache file " + path_);
    out << header().dump() << '\n';
    return;
  }
  std::ifstream in(path_);
  if (!in) throw std::runtime_error("cannot read cache file " + path_);
  std::string line;
  if (!std::getline(in, line)) {
    std::ofstream out(path_);
    out << header().dump() << '\n';
    return;
  }
  const ordered_json h = ordered_json::parse(line, nullptr, false);
  if (h.is_discarded() || !h.is_object() || h.value("format", "") != kFormat)
    throw std::runtime_error("not a cache file: " + path_);
  if (h.value("version", 0) != kVersion)
    throw std::runtime_error("unsupported cache version in " + path_);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const ordered_json j = ordered_json::parse(line);
      Context ctx{j.at("k").get<int>(), j.at("l").get<int>()};
      ctx.validate();
      const Mode mode = parse_mode(j.at("mode").get<std::string>());
      Partition mu = partition_from_json(j.at("mu"));
      FockVector g(ctx);
      for (const auto& t : j.at("g")) g.add(partition_from_json(t.at("la")), poly_from_json(t.at("p")));
      entries_.insert_or_assign(Key{ctx.k, ctx.l, mode, std::move(mu)}, std::move(g));
    } catch (const std::exception&) {
      ++skipped_;
    }
  }
}

std::optional<FockVector> GcbCache::lookup(const Context& ctx, Mode mode, const Partition& mu) const {
  auto it = entries_.find(Key{ctx.k, ctx.l, mode, mu});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void GcbCache::store(const Context& ctx, Mode mode, const Partition& mu, const FockVector& g) {
  auto [it, inserted] = entries_.try_emplace(Key{ctx.k, ctx.l, mode, mu}, g);
  if (!inserted) return;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("cannot append to cache file " + path_);
  out << cache_record(ctx, mode, mu, g) << '\n';
  out.flush();
}

}  // namespace cbt
