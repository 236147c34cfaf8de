#pragma once

#include <stdexcept>
#include <string>

namespace trs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define TRS_DEFINE_ERROR(name)          \
    struct name : Error {               \
        using Error::Error;             \
    }

// ledger
TRS_DEFINE_ERROR(InsufficientFunds);
TRS_DEFINE_ERROR(InsufficientFrozen);
TRS_DEFINE_ERROR(UnknownAccount);
TRS_DEFINE_ERROR(DuplicateAccount);

// pricing
TRS_DEFINE_ERROR(ParamViolation);

// crypto
TRS_DEFINE_ERROR(DecryptFailure);

// selection
TRS_DEFINE_ERROR(NoFeasibleRoute);

// contract
TRS_DEFINE_ERROR(AlreadyRegistered);
TRS_DEFINE_ERROR(ZeroDeposit);
TRS_DEFINE_ERROR(NotOwner);
TRS_DEFINE_ERROR(WithdrawExceedsUnfrozen);
TRS_DEFINE_ERROR(UnknownService);
TRS_DEFINE_ERROR(MissingSignature);
TRS_DEFINE_ERROR(WrongCaller);
TRS_DEFINE_ERROR(MalformedSubmission);
TRS_DEFINE_ERROR(ServiceNotActive);
TRS_DEFINE_ERROR(BadEvidence);
TRS_DEFINE_ERROR(TooLate);
TRS_DEFINE_ERROR(NotOnRoute);
TRS_DEFINE_ERROR(DepositAlreadyReleased);
TRS_DEFINE_ERROR(OutOfOrderCall);
TRS_DEFINE_ERROR(NoAward);

// harness
TRS_DEFINE_ERROR(SpecError);
TRS_DEFINE_ERROR(TraceCorrupt);

#undef TRS_DEFINE_ERROR

}  // namespace trs
