#pragma once

#include <stdexcept>
#include <string>

namespace ssg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoopEdgeError : Error {
    using Error::Error;
};
struct DuplicateEdgeError : Error {
    using Error::Error;
};
struct UnknownVertexError : Error {
    using Error::Error;
};
struct UnknownEdgeError : Error {
    using Error::Error;
};
struct SideNotEndpointError : Error {
    using Error::Error;
};
struct EdgeNotInGraphError : Error {
    using Error::Error;
};
struct InvalidParametersError : Error {
    using Error::Error;
};
struct MalformedGraph6Error : Error {
    using Error::Error;
};
struct MalformedInputError : Error {
    using Error::Error;
};
struct PartialColoringError : Error {
    using Error::Error;
};
struct AlreadyColoredError : Error {
    using Error::Error;
};
struct NotATreeError : Error {
    using Error::Error;
};
struct InternalInvariantError : Error {
    using Error::Error;
};

} // namespace ssg
