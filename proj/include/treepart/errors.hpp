#pragma once

#include <stdexcept>
#include <string>

namespace treepart {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-contract input (bad node ids, non-tree edge sets,
/// unparsable files, violated preconditions).
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// An enumeration or search guard was exceeded.
struct SizeError : Error {
    explicit SizeError(const std::string& msg) : Error(msg) {}
};

/// A lifted vector does not encode any decomposition of the tree.
struct EncodingError : Error {
    explicit EncodingError(const std::string& msg) : Error(msg) {}
};

/// An internal consistency check failed. Never expected to throw.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

}  // namespace treepart
