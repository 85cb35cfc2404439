#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ramsey {

// Malformed or out-of-contract input (bad shape, bad range, bad JSON).
// The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A precondition that fails as a verifiable mathematical fact about
// well-formed input ("not Sidon", "not ultrametric", ...). The CLI maps
// this to exit code 1 and embeds the witness in the certificate.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The strong triangle inequality fails: dist(i,k) > max(dist(i,j), dist(j,k)).
struct not_ultrametric_error : precondition_error {
    not_ultrametric_error(std::string msg, std::array<int, 3> t)
        : precondition_error(std::move(msg)), triple(t) {}
    std::array<int, 3> triple;
};

// Two distinct pairs of the set share a difference.
struct not_sidon_error : precondition_error {
    not_sidon_error(std::string msg, std::array<std::int64_t, 2> p,
                    std::array<std::int64_t, 2> q)
        : precondition_error(std::move(msg)), pair1(p), pair2(q) {}
    std::array<std::int64_t, 2> pair1;
    std::array<std::int64_t, 2> pair2;
};

// A family operation was called below its required separation level.
struct separation_error : precondition_error {
    separation_error(std::string msg, std::string req, std::string got)
        : precondition_error(std::move(msg)), required(std::move(req)),
          actual(std::move(got)) {}
    std::string required;
    std::string actual;
};

} // namespace ramsey
