#include "pim/json_io.hpp"

namespace pim {

HalfIntMat halfint_from_json(const Json& j) {
    if (!j.is_array()) throw Error("matrix JSON must be an array of rows (entries of 2B)");
    int m = static_cast<int>(j.size());
    IntMat t(m, m);
    for (int i = 0; i < m; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != m)
            throw Error("matrix JSON must be square");
        for (int c = 0; c < m; ++c) {
            const auto& e = j[i][c];
            if (e.is_number_integer())
                t.at(i, c) = Int(static_cast<long>(e.get<long long>()));
            else
                t.at(i, c) = Int(e.get<std::string>());
        }
    }
    return HalfIntMat::from_twoB(std::move(t));
}

Json halfint_to_json(const HalfIntMat& B) {
    Json rows = Json::array();
    for (int i = 0; i < B.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < B.size(); ++j) {
            const Int& e = B.twoB(i, j);
            if (e.fits_slong_p())
                row.push_back(e.get_si());
            else
                row.push_back(e.get_str());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json qseries_to_json(const QSeries& s) {
    Json arr = Json::array();
    for (int n = 0; n <= s.prec(); ++n) arr.push_back(s.coeff(n).str());
    return arr;
}

}  // namespace pim
