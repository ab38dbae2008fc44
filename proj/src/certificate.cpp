#include "pohst/certificate.hpp"

#include <json.hpp>

namespace pohst {

using nlohmann::json;

std::string_view builder_version() { return "pohst-verify 1.0.0"; }

Certificate make_certificate(GoodPartition partition) {
    return Certificate{std::move(partition), std::string(builder_version())};
}

std::string serialize_certificate(const Certificate& cert, int indent) {
    json blocks = json::array();
    for (const auto& block : cert.partition.blocks) {
        json members = json::array();
        json signs = json::array();
        for (const auto& m : block.members) {
            members.push_back({m.index.i, m.index.j});
            signs.push_back(to_int(m.sign));
        }
        blocks.push_back({{"kind", to_string(block.kind)},
                          {"members", std::move(members)},
                          {"signs", std::move(signs)},
                          {"provenance", to_string(block.provenance)}});
    }
    const json doc = {{"n", cert.partition.n},
                      {"pattern", cert.partition.pattern.to_ints()},
                      {"blocks", std::move(blocks)},
                      {"version", cert.version}};
    return doc.dump(indent) + "\n";
}

namespace {

const json& field(const json& obj, const char* key) {
    if (!obj.is_object()) throw CertificateFormatError("expected a JSON object");
    auto it = obj.find(key);
    if (it == obj.end()) throw CertificateFormatError(std::string("missing key '") + key + "'");
    return *it;
}

int as_int(const json& value, const char* what) {
    if (!value.is_number_integer()) throw CertificateFormatError(std::string(what) + " must be an integer");
    return value.get<int>();
}

Sign as_sign(const json& value) {
    const int s = as_int(value, "sign");
    if (s != 1 && s != -1) throw CertificateFormatError("sign must be +1 or -1");
    return s == 1 ? Sign::positive : Sign::negative;
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CertificateFormatError(std::string("malformed JSON: ") + e.what());
    }

    Certificate cert;
    auto& gp = cert.partition;
    gp.n = as_int(field(doc, "n"), "n");

    const auto& pattern = field(doc, "pattern");
    if (!pattern.is_array() || pattern.empty()) throw CertificateFormatError("pattern must be a nonempty array");
    std::vector<Sign> signs;
    for (const auto& s : pattern) signs.push_back(as_sign(s));
    gp.pattern = SignPattern(std::move(signs));

    const auto& version = field(doc, "version");
    if (!version.is_string()) throw CertificateFormatError("version must be a string");
    cert.version = version.get<std::string>();

    const auto& blocks = field(doc, "blocks");
    if (!blocks.is_array()) throw CertificateFormatError("blocks must be an array");
    for (const auto& b : blocks) {
        PartitionBlock block;
        const auto& kind = field(b, "kind");
        const auto& provenance = field(b, "provenance");
        if (!kind.is_string() || !provenance.is_string()) {
            throw CertificateFormatError("kind and provenance must be strings");
        }
        try {
            block.kind = parse_block_kind(kind.get<std::string>());
            block.provenance = parse_provenance(provenance.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw CertificateFormatError(e.what());
        }
        const auto& members = field(b, "members");
        const auto& member_signs = field(b, "signs");
        if (!members.is_array() || !member_signs.is_array() || members.size() != member_signs.size()) {
            throw CertificateFormatError("members and signs must be arrays of equal length");
        }
        for (std::size_t k = 0; k < members.size(); ++k) {
            const auto& pair = members[k];
            if (!pair.is_array() || pair.size() != 2) throw CertificateFormatError("member must be an [i, j] pair");
            const TermIndex t{as_int(pair[0], "index"), as_int(pair[1], "index")};
            block.members.push_back(SignedTerm{t, as_sign(member_signs[k]), true});
        }
        gp.blocks.push_back(std::move(block));
    }
    return cert;
}

}  // namespace pohst
