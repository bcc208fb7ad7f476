#include "pim/curated.hpp"

namespace pim {

CuratedStore CuratedStore::from_json(const Json& arr, bool allow_unverified) {
    CuratedStore s;
    for (const auto& item : arr) {
        CuratedValue v;
        v.name = item.at("name").get<std::string>();
        v.value = Scalar::parse(item.at("value").get<std::string>());
        v.provenance = item.value("provenance", std::string());
        if (v.provenance.empty() && !allow_unverified)
            throw Error("curated value '" + v.name +
                        "' has no provenance (pass --allow-unverified to accept)");
        s.values_[v.name] = std::move(v);
    }
    return s;
}

const CuratedValue& CuratedStore::get(const std::string& name) const {
    auto it = values_.find(name);
    if (it == values_.end()) throw Error("missing curated value '" + name + "'");
    return it->second;
}

void CuratedStore::override_value(const std::string& name, const Scalar& v) {
    auto it = values_.find(name);
    if (it == values_.end()) throw Error("missing curated value '" + name + "'");
    it->second.value = v;
    it->second.provenance += " (perturbed)";
}

}  // namespace pim
