#include "dstm/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dstm {

using ordered_json = nlohmann::ordered_json;

Tensor<RationalField> parse_tensor_json(const std::string& text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail_input("tensor file is not valid JSON");
    if (!doc.is_object() || !doc.contains("shape") || !doc.contains("degree") ||
        !doc.contains("entries"))
        fail_input("tensor file needs fields: shape, degree, entries");

    if (!doc["shape"].is_array()) fail_input("shape must be a list of integers");
    std::vector<int> entries_of_shape;
    for (const auto& e : doc["shape"]) {
        if (!e.is_number_integer()) fail_input("shape must be a list of integers");
        entries_of_shape.push_back(e.get<int>());
    }
    Shape s;
    try {
        s = Shape::of(entries_of_shape);
    } catch (const Error&) {
        fail_input("shape entries must be positive");
    }

    if (!doc["degree"].is_number_integer()) fail_input("degree must be an integer");
    const int p = doc["degree"].get<int>();
    if (p < 0) fail_input("degree must be nonnegative");

    if (!doc["entries"].is_array()) fail_input("entries must be a list");
    std::vector<Rational> coeffs;
    for (const auto& e : doc["entries"]) {
        if (e.is_number_integer())
            coeffs.emplace_back(e.get<long long>());
        else if (e.is_string())
            coeffs.push_back(parse_rational(e.get<std::string>()));
        else
            fail_input("entries must be integers or rational strings");
    }
    if (coeffs.size() != index_count(s, p))
        fail_input("entry count " + std::to_string(coeffs.size()) + " does not match |I_p| = " +
                   std::to_string(index_count(s, p)));
    return tensor_from_entries<RationalField>(s, p, std::move(coeffs));
}

Tensor<RationalField> read_tensor_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail_input("cannot read tensor file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_tensor_json(buf.str());
}

std::string tensor_json(const Tensor<RationalField>& t) {
    ordered_json doc;
    doc["shape"] = t.shape.entries;
    doc["degree"] = t.degree;
    auto arr = ordered_json::array();
    for (const auto& x : t.c) arr.push_back(rational_str(x));
    doc["entries"] = std::move(arr);
    return doc.dump(2) + "\n";
}

void write_tensor_file(const std::string& path, const Tensor<RationalField>& t) {
    std::ofstream out(path);
    if (!out) fail_input("cannot write tensor file: " + path);
    out << tensor_json(t);
}

} // namespace dstm
