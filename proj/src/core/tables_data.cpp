// Transcribed almost-special tables for the exceptional simply laced types.
// One family per line, members comma-separated, ((...)) marking the members
// that are not 2-special.  load_table() verifies the digests below before
// parsing, so any edit here must update the matching constant.

#include "exceptional_tables.hpp"

namespace asrep {

namespace {

constexpr std::string_view kTableE6 =
    "1_0\n"
    "6_1\n"
    "20_2\n"
    "30_3,15_4\n"
    "64_4\n"
    "60_5\n"
    "24_6\n"
    "81_6\n"
    "80_7,60_8,10_9\n"
    "81_10\n"
    "60_11\n"
    "24_12\n"
    "64_13\n"
    "30_15,15_16\n"
    "20_20\n"
    "6_25\n"
    "1_36\n";

constexpr std::string_view kTableE7 =
    "1_0\n"
    "7_1\n"
    "27_2\n"
    "21_3\n"
    "56_3,35_4\n"
    "120_4,((15_7))\n"
    "189_5\n"
    "315_7,280_8,70_9\n"
    "405_8,216_9\n"
    "378_9\n"
    "210_10\n"
    "420_10,84_12\n"
    "105_12\n"
    "210_6\n"
    "105_6\n"
    "168_6\n"
    "189_7\n"
    "512_11\n"
    "210_13\n"
    "420_13,84_15\n"
    "378_14\n"
    "105_15\n"
    "405_15,216_16\n"
    "315_16,280_17,70_18\n"
    "189_20\n"
    "168_21\n"
    "105_21\n"
    "210_21\n"
    "189_22\n"
    "120_24,15_28\n"
    "56_30,35_31\n"
    "21_36\n"
    "27_37\n"
    "7_46\n"
    "1_63\n";

constexpr std::string_view kTableE8 =
    "1_0\n"
    "8_1\n"
    "35_2\n"
    "112_3,84_4\n"
    "210_4,((50_8))\n"
    "560_5\n"
    "567_6\n"
    "700_6,400_7\n"
    "1400_7,1344_8,448_9\n"
    "1400_8,1050_10,175_12\n"
    "3240_9\n"
    "2268_10,972_12\n"
    "2240_10,1400_11\n"
    "4096_11\n"
    "525_12\n"
    "4200_12,840_14\n"
    "2800_13,((700_16))\n"
    "4536_13\n"
    "2835_14\n"
    "6075_14\n"
    "4200_15\n"
    "5600_15,3200_16\n"
    "4480_16,7168_17,4200_18,3150_18,2016_19,1344_19,420_20,168_24\n"
    "2100_20\n"
    "4200_21\n"
    "5600_21,3200_22\n"
    "6075_22\n"
    "2835_22\n"
    "4536_23\n"
    "4200_24,840_26\n"
    "2800_25,700_28\n"
    "4096_26\n"
    "2240_28,1400_29\n"
    "2268_30,972_32\n"
    "3240_31\n"
    "1400_32,1050_34,175_36\n"
    "525_36\n"
    "1400_37,1344_38,448_39\n"
    "700_42,400_43\n"
    "567_46\n"
    "560_47\n"
    "210_52,50_56\n"
    "112_63,84_64\n"
    "35_74\n"
    "8_91\n"
    "1_120\n";

}  // namespace

std::string_view table_text(GroupType t) {
    switch (t) {
        case GroupType::E6: return kTableE6;
        case GroupType::E7: return kTableE7;
        case GroupType::E8: return kTableE8;
        default: throw std::domain_error("no almost-special table for this type");
    }
}

std::uint64_t table_digest(GroupType t) {
    switch (t) {
        case GroupType::E6: return 0x1ae716c0988fdba7ull;
        case GroupType::E7: return 0x587402427c6c1b3cull;
        case GroupType::E8: return 0x410f2cd209299797ull;
        default: throw std::domain_error("no almost-special table for this type");
    }
}

}  // namespace asrep
