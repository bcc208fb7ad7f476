#pragma once

#include <stdexcept>
#include <string>

namespace pim {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& w) : Error("field mismatch: " + w) {}
};

struct NonRationalLocalFactor : Error {
    explicit NonRationalLocalFactor(const std::string& w)
        : Error("non-rational local factor: " + w) {}
};

struct NotPSD : Error {
    explicit NotPSD(const std::string& w) : Error("matrix not positive semidefinite: " + w) {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& w) : Error("rank-deficient system: " + w) {}
};

struct InconsistentSystem : Error {
    explicit InconsistentSystem(const std::string& w) : Error("inconsistent system: " + w) {}
};

struct DegreeUnsupported : Error {
    explicit DegreeUnsupported(const std::string& w) : Error("degree unsupported: " + w) {}
};

struct SizeUnsupported : Error {
    explicit SizeUnsupported(const std::string& w) : Error("size unsupported: " + w) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w) : Error("enumeration budget exceeded: " + w) {}
};

struct NonIntegerCoefficient : Error {
    explicit NonIntegerCoefficient(const std::string& w)
        : Error("non-integer Siegel series coefficient: " + w) {}
};

// Internal cross-checks (overdetermined equations) that must agree exactly.
struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& w) : Error("consistency check failed: " + w) {}
};

struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& w)
        : Error("insufficient series precision: " + w) {}
};

}  // namespace pim
