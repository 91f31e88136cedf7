#include "tmtrace/serialize.hpp"

#include "tmtrace/af_core.hpp"

namespace tmtrace {

Json to_json_value(const Word& w) { return w.str(); }

Json to_json_value(const Rational& q) { return to_string(q); }

Json to_json_value(const DyadicThirdRational& q) { return to_string(q.value()); }

Json to_json_value(const BlockDecomposition& d) {
	Json bits = Json::array();
	for (std::size_t i = 0; i < d.blocks.size(); ++i)
		bits.push_back(d.blocks[i]);
	return {{"level", d.level}, {"gamma0", d.gamma0.str()}, {"blocks", bits}, {"gamma1", d.gamma1.str()}};
}

Json to_json_value(const K0Element& e) { return {{"level", e.level}, {"a", e.x}, {"b", e.y}}; }

Json to_json_value(const std::set<Word>& words) {
	Json out = Json::array();
	for (const Word& w : words)
		out.push_back(w.str());
	return out;
}

Json to_json_value(const RangeFamily& A) { return to_json_value(A.words()); }

Json to_json_value(const AxiomResiduals& r) {
	return {{"lattice", r.lattice},
	        {"covariance", r.covariance},
	        {"isometry", r.isometry},
	        {"cuntz_krieger", r.cuntz_krieger}};
}

Json to_json_value(const BlockTraces& b) { return {{"equal", to_string(b.equal)}, {"mixed", to_string(b.mixed)}}; }

Json bratteli_json(unsigned k_max) {
	Json levels = Json::array();
	Json matrices = Json::array();
	for (unsigned k = 1; k <= k_max; ++k) {
		const AfLevel L = af_level(k);
		levels.push_back({{"k", k}, {"dimension", L.dimension()}, {"basis", to_json_value(std::set<Word>(L.basis.begin(), L.basis.end()))}});
	}
	for (unsigned k = 1; k < k_max; ++k) {
		const InclusionMatrix m = inclusion_matrix(k);
		Json rows = Json::array();
		for (std::size_t r = 0; r < m.rows(); ++r) {
			Json row = Json::array();
			for (std::size_t c = 0; c < m.cols(); ++c)
				row.push_back(m.at(r, c));
			rows.push_back(std::move(row));
		}
		matrices.push_back({{"k", k}, {"rows", std::move(rows)}});
	}
	return {{"levels", std::move(levels)}, {"matrices", std::move(matrices)}};
}

std::string dump_line(const Json& j) { return j.dump(); }

} // namespace tmtrace
