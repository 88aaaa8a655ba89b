#pragma once

#include <stdexcept>
#include <string>

namespace zv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define ZV_DEFINE_ERROR(Name)                                          \
    class Name : public Error {                                        \
    public:                                                            \
        using Error::Error;                                            \
        const char* kind() const noexcept override { return #Name; }   \
    }

ZV_DEFINE_ERROR(PoleError);
ZV_DEFINE_ERROR(DomainError);
ZV_DEFINE_ERROR(RangeError);
ZV_DEFINE_ERROR(NearZeroError);
ZV_DEFINE_ERROR(UnwrapError);
ZV_DEFINE_ERROR(FormatError);
ZV_DEFINE_ERROR(OrderError);
ZV_DEFINE_ERROR(EmptyTableError);
ZV_DEFINE_ERROR(UnknownCheckError);
ZV_DEFINE_ERROR(MissingDataError);

#undef ZV_DEFINE_ERROR

}  // namespace zv
