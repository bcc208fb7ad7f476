#pragma once

#include <map>
#include <string>

#include "pim/json_io.hpp"
#include "pim/scalar.hpp"

namespace pim {

// An externally computed constant consumed by the verifier.  Provenance is
// mandatory; values without it are rejected unless explicitly allowed.
struct CuratedValue {
    std::string name;
    Scalar value;
    std::string provenance;
    int embedding = +1;  // +1 stored; -1 is the Galois conjugate

    CuratedValue conj() const {
        return {name, value.conj(), provenance + " (Galois conjugate)", -embedding};
    }
};

class CuratedStore {
public:
    static CuratedStore from_json(const Json& arr, bool allow_unverified);

    bool has(const std::string& name) const { return values_.count(name) > 0; }
    const CuratedValue& get(const std::string& name) const;

    // Test hook: replace a value (keeps provenance, marks it perturbed).
    void override_value(const std::string& name, const Scalar& v);

private:
    std::map<std::string, CuratedValue> values_;
};

}  // namespace pim
