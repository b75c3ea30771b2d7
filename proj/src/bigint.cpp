#include "stirbd/bigint.hpp"
#include "stirbd/error.hpp"

namespace stirbd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::OddNegativeCount: return "OddNegativeCount";
    case ErrorCode::FlavorMismatch: return "FlavorMismatch";
    case ErrorCode::SizeOverflow: return "SizeOverflow";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::MirrorViolation: return "MirrorViolation";
    case ErrorCode::MultipleZeroBlocks: return "MultipleZeroBlocks";
    case ErrorCode::SingletonZeroBlock: return "SingletonZeroBlock";
    case ErrorCode::RepeatedValueInBlock: return "RepeatedValueInBlock";
    case ErrorCode::InvalidColorCount: return "InvalidColorCount";
    case ErrorCode::SpotCollision: return "SpotCollision";
    case ErrorCode::InvalidSpot: return "InvalidSpot";
    case ErrorCode::TooManySeparators: return "TooManySeparators";
    case ErrorCode::NotTypeD: return "NotTypeD";
    case ErrorCode::InvalidOrderedPartition: return "InvalidOrderedPartition";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(long a, long b) {
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  BigInt r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;
  }
  return r;
}

BigInt power(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace stirbd
