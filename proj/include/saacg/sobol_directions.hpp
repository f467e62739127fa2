// Sobol direction numbers (Joe-Kuo), 128 dimensions x 32 bits.
// Generated data table; do not edit by hand.
#pragma once

#include <cstdint>

namespace saacg::detail {

inline constexpr int kSobolMaxDim = 128;
inline constexpr int kSobolBits = 32;

inline constexpr std::uint32_t kSobolDirections[128][32] = {
    {0x80000000u, 0x40000000u, 0x20000000u, 0x10000000u, 0x08000000u, 0x04000000u, 0x02000000u, 0x01000000u, 0x00800000u, 0x00400000u, 0x00200000u, 0x00100000u, 0x00080000u, 0x00040000u, 0x00020000u, 0x00010000u, 0x00008000u, 0x00004000u, 0x00002000u, 0x00001000u, 0x00000800u, 0x00000400u, 0x00000200u, 0x00000100u, 0x00000080u, 0x00000040u, 0x00000020u, 0x00000010u, 0x00000008u, 0x00000004u, 0x00000002u, 0x00000001u},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0xf0000000u, 0x88000000u, 0xcc000000u, 0xaa000000u, 0xff000000u, 0x80800000u, 0xc0c00000u, 0xa0a00000u, 0xf0f00000u, 0x88880000u, 0xcccc0000u, 0xaaaa0000u, 0xffff0000u, 0x80008000u, 0xc000c000u, 0xa000a000u, 0xf000f000u, 0x88008800u, 0xcc00cc00u, 0xaa00aa00u, 0xff00ff00u, 0x80808080u, 0xc0c0c0c0u, 0xa0a0a0a0u, 0xf0f0f0f0u, 0x88888888u, 0xccccccccu, 0xaaaaaaaau, 0xffffffffu},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0x90000000u, 0xe8000000u, 0x5c000000u, 0x8e000000u, 0xc5000000u, 0x68800000u, 0x9cc00000u, 0xee600000u, 0x55900000u, 0x80680000u, 0xc09c0000u, 0x60ee0000u, 0x90550000u, 0xe8808000u, 0x5cc0c000u, 0x8e606000u, 0xc5909000u, 0x6868e800u, 0x9c9c5c00u, 0xeeee8e00u, 0x5555c500u, 0x8000e880u, 0xc0005cc0u, 0x60008e60u, 0x9000c590u, 0xe8006868u, 0x5c009c9cu, 0x8e00eeeeu, 0xc5005555u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0x50000000u, 0xf8000000u, 0x74000000u, 0xa2000000u, 0x93000000u, 0xd8800000u, 0x25400000u, 0x59e00000u, 0xe6d00000u, 0x78080000u, 0xb40c0000u, 0x82020000u, 0xc3050000u, 0x208f8000u, 0x51474000u, 0xfbea2000u, 0x75d93000u, 0xa0858800u, 0x914e5400u, 0xdbe79e00u, 0x25db6d00u, 0x58800080u, 0xe54000c0u, 0x79e00020u, 0xb6d00050u, 0x800800f8u, 0xc00c0074u, 0x200200a2u, 0x50050093u},
    {0x80000000u, 0x40000000u, 0x20000000u, 0xb0000000u, 0xf8000000u, 0xdc000000u, 0x7a000000u, 0x9d000000u, 0x5a800000u, 0x2fc00000u, 0xa1600000u, 0xf0b00000u, 0xda880000u, 0x6fc40000u, 0x81620000u, 0x40bb0000u, 0x22878000u, 0xb3c9c000u, 0xfb65a000u, 0xddb2d000u, 0x78022800u, 0x9c0b3c00u, 0x5a0fb600u, 0x2d0ddb00u, 0xa2878080u, 0xf3c9c040u, 0xdb65a020u, 0x6db2d0b0u, 0x800228f8u, 0x400b3cdcu, 0x200fb67au, 0xb00ddb9du},
    {0x80000000u, 0x40000000u, 0x60000000u, 0x30000000u, 0xc8000000u, 0x24000000u, 0x56000000u, 0xfb000000u, 0xe0800000u, 0x70400000u, 0xa8600000u, 0x14300000u, 0x9ec80000u, 0xdf240000u, 0xb6d60000u, 0x8bbb0000u, 0x48008000u, 0x64004000u, 0x36006000u, 0xcb003000u, 0x2880c800u, 0x54402400u, 0xfe605600u, 0xef30fb00u, 0x7e48e080u, 0xaf647040u, 0x1eb6a860u, 0x9f8b1430u, 0xd6c81ec8u, 0xbb249f24u, 0x80d6d6d6u, 0x40bbbbbbu},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0xd0000000u, 0x58000000u, 0x94000000u, 0x3e000000u, 0xe3000000u, 0xbe800000u, 0x23c00000u, 0x1e200000u, 0xf3100000u, 0x46780000u, 0x67840000u, 0x78460000u, 0x84670000u, 0xc6788000u, 0xa784c000u, 0xd846a000u, 0x5467d000u, 0x9e78d800u, 0x33845400u, 0xe6469e00u, 0xb7673300u, 0x20f86680u, 0x104477c0u, 0xf8668020u, 0x4477c010u, 0x668020f8u, 0x77c01044u, 0x8020f866u, 0xc0104477u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x50000000u, 0x88000000u, 0x24000000u, 0x12000000u, 0x2d000000u, 0x76800000u, 0x9e400000u, 0x08200000u, 0x64100000u, 0xb2280000u, 0x7d140000u, 0xfea20000u, 0xba490000u, 0x1a248000u, 0x491b4000u, 0xc4b5a000u, 0xe3739000u, 0xf6800800u, 0xde400400u, 0xa8200a00u, 0x34100500u, 0x3a280880u, 0x59140240u, 0xeca20120u, 0x974902d0u, 0x6ca48768u, 0xd75b49e4u, 0xcc95a082u, 0x87639641u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x50000000u, 0x28000000u, 0xd4000000u, 0x6a000000u, 0x71000000u, 0x38800000u, 0x58400000u, 0xea200000u, 0x31100000u, 0x98a80000u, 0x08540000u, 0xc22a0000u, 0xe5250000u, 0xf2b28000u, 0x79484000u, 0xfaa42000u, 0xbd731000u, 0x18a80800u, 0x48540400u, 0x622a0a00u, 0xb5250500u, 0xdab28280u, 0xad484d40u, 0x90a426a0u, 0xcc731710u, 0x20280b88u, 0x10140184u, 0x880a04a2u, 0x84350611u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0xb0000000u, 0x98000000u, 0x94000000u, 0x8a000000u, 0x5b000000u, 0x33800000u, 0xd9c00000u, 0x72200000u, 0x3f100000u, 0xc1b80000u, 0xa6ec0000u, 0x53860000u, 0x29f50000u, 0x0a3a8000u, 0x1b2ac000u, 0xd392e000u, 0x69ff7000u, 0xea380800u, 0xab2c0400u, 0x4ba60e00u, 0xfde50b00u, 0x60028980u, 0xf006c940u, 0x7834e8a0u, 0x241a75b0u, 0x123a8b38u, 0xcf2ac99cu, 0xb992e922u, 0x82ff78f1u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x10000000u, 0x08000000u, 0x6c000000u, 0x9e000000u, 0x23000000u, 0x57800000u, 0xadc00000u, 0x7fa00000u, 0x91d00000u, 0x49880000u, 0xced40000u, 0x880a0000u, 0x2c0f0000u, 0x3e0d8000u, 0x3317c000u, 0x5fb06000u, 0xc1f8b000u, 0xe18d8800u, 0xb2d7c400u, 0x1e106a00u, 0x6328b100u, 0xf7858880u, 0xbdc3c2c0u, 0x77ba63e0u, 0xfdf7b330u, 0xd7800df8u, 0xedc0081cu, 0xdfa0041au, 0x81d00a2du},
    {0x80000000u, 0x40000000u, 0x20000000u, 0x30000000u, 0x58000000u, 0xac000000u, 0x96000000u, 0x2b000000u, 0xd4800000u, 0x09400000u, 0xe2a00000u, 0x52500000u, 0x4e280000u, 0xc71c0000u, 0x629e0000u, 0x12670000u, 0x6e138000u, 0xf731c000u, 0x3a98a000u, 0xbe449000u, 0xf83b8800u, 0xdc2dc400u, 0xee06a200u, 0xb7239300u, 0x1aa80d80u, 0x8e5c0ec0u, 0xa03e0b60u, 0x703701b0u, 0x783b88c8u, 0x9c2dca54u, 0xce06a74au, 0x87239795u},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0x50000000u, 0xf8000000u, 0x8c000000u, 0xe2000000u, 0x33000000u, 0x0f800000u, 0x21400000u, 0x95a00000u, 0x5e700000u, 0xd8080000u, 0x1c240000u, 0xba160000u, 0xef370000u, 0x15868000u, 0x9e6fc000u, 0x781b6000u, 0x4c349000u, 0x420e8800u, 0x630bcc00u, 0xf7ad6a00u, 0xad739500u, 0x77800780u, 0x6d4004c0u, 0xd7a00420u, 0x3d700630u, 0x2f880f78u, 0xb1640ad4u, 0xcdb6077au, 0x824706d7u},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0x90000000u, 0x38000000u, 0xc4000000u, 0x42000000u, 0xa3000000u, 0xf1800000u, 0xaa400000u, 0xfce00000u, 0x85100000u, 0xe0080000u, 0x500c0000u, 0x58060000u, 0x54090000u, 0x7a038000u, 0x670c4000u, 0xb3842000u, 0x094a3000u, 0x0d6f1800u, 0x2f5aa400u, 0x1ce7ce00u, 0xd5145100u, 0xb8000080u, 0x040000c0u, 0x22000060u, 0x33000090u, 0xc9800038u, 0x6e4000c4u, 0xbee00042u, 0x261000a3u},
    {0x80000000u, 0x40000000u, 0x20000000u, 0xf0000000u, 0xa8000000u, 0x54000000u, 0x9a000000u, 0x9d000000u, 0x1e800000u, 0x5cc00000u, 0x7d200000u, 0x8d100000u, 0x24880000u, 0x71c40000u, 0xeba20000u, 0x75df0000u, 0x6ba28000u, 0x35d14000u, 0x4ba3a000u, 0xc5d2d000u, 0xe3a16800u, 0x91db8c00u, 0x79aef200u, 0x0cdf4100u, 0x672a8080u, 0x50154040u, 0x1a01a020u, 0xdd0dd0f0u, 0x3e83e8a8u, 0xaccacc54u, 0xd52d529au, 0xd91d919du},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0xd0000000u, 0xd8000000u, 0xc4000000u, 0x46000000u, 0x85000000u, 0xa5800000u, 0x76c00000u, 0xada00000u, 0x6ab00000u, 0x2da80000u, 0xaabc0000u, 0x0daa0000u, 0x7ab10000u, 0xd5a78000u, 0xbebd4000u, 0x93a3e000u, 0x3bb51000u, 0x3629b800u, 0x4d727c00u, 0x9b836200u, 0x27c4d700u, 0xb629b880u, 0x8d727cc0u, 0xbb836220u, 0xf7c4d7d0u, 0x6e29b858u, 0x49727c04u, 0xfd836266u, 0x72c4d755u},
    {0x80000000u, 0x40000000u, 0x20000000u, 0xf0000000u, 0x38000000u, 0x14000000u, 0xf6000000u, 0x67000000u, 0x8f800000u, 0x50400000u, 0x8aa00000u, 0x0ff00000u, 0x12a80000u, 0xabf40000u, 0xfcaa0000u, 0x28fb0000u, 0xbd298000u, 0x0bba4000u, 0x4e06e000u, 0x330c3000u, 0x59861800u, 0xc74d3400u, 0x3d2cb200u, 0x4bb2cb00u, 0x6e061880u, 0xc30d3440u, 0x618cb220u, 0xd342cbf0u, 0xcb2e18b8u, 0x2cb93454u, 0xe186b2d6u, 0x9349cb97u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0xf0000000u, 0x68000000u, 0x64000000u, 0x36000000u, 0x6d000000u, 0x41800000u, 0xe0400000u, 0xd2e00000u, 0x9bf00000u, 0x0ce80000u, 0x52fc0000u, 0x5b6a0000u, 0x2fb30000u, 0xa00c8000u, 0x30054000u, 0x4807e000u, 0x940f9000u, 0x5e01f800u, 0x090e9400u, 0x778a5600u, 0x8d416b00u, 0x9369f880u, 0x7bb294c0u, 0xde005620u, 0xc9026bf0u, 0x578d78e8u, 0x7d4bd4a4u, 0xfb6db616u, 0x1fbefb9du},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x50000000u, 0x98000000u, 0xf4000000u, 0xae000000u, 0xbb000000u, 0xe7800000u, 0x95c00000u, 0x1c200000u, 0xd0300000u, 0xdba80000u, 0x55f40000u, 0xff820000u, 0x21c10000u, 0x12238000u, 0x3b3a4000u, 0xa42b6000u, 0x3430f000u, 0x4da69800u, 0x4af3ec00u, 0x2e043a00u, 0xfb0a1f00u, 0x47851880u, 0xc5c9ac40u, 0x842f5aa0u, 0x243aef50u, 0x75a38018u, 0xeefa40b4u, 0x180b600eu, 0xb400f0ebu},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0xb0000000u, 0xb8000000u, 0x3c000000u, 0xce000000u, 0x41000000u, 0x21800000u, 0x51c00000u, 0x09600000u, 0x85700000u, 0xf2780000u, 0x8e9c0000u, 0x60020000u, 0x70030000u, 0x58038000u, 0x8c02c000u, 0x7602e000u, 0x7d00f000u, 0xef833800u, 0x10c10400u, 0x28e08600u, 0xd4b14700u, 0xfb182580u, 0x0bee15c0u, 0x9279c9e0u, 0xfe9d3a70u, 0x38000008u, 0xfc00000cu, 0x2e00000eu, 0xf100000bu},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0xd0000000u, 0x68000000u, 0x3c000000u, 0x8a000000u, 0x51000000u, 0xa9800000u, 0xddc00000u, 0x5ba00000u, 0x39d00000u, 0x95f80000u, 0x56d40000u, 0x0a020000u, 0x91030000u, 0x49838000u, 0x0dc34000u, 0x33a1a000u, 0x05d0f000u, 0x1ffa2800u, 0x07d54400u, 0xa380a600u, 0x4cc07700u, 0x1222ee80u, 0x3413a740u, 0xa65bf7e0u, 0x5305ab50u, 0x15f80008u, 0x96d4000cu, 0xea02000eu, 0x4103000du},
    {0x80000000u, 0x40000000u, 0x60000000u, 0xd0000000u, 0x38000000u, 0x8c000000u, 0x7e000000u, 0x71000000u, 0xc8800000u, 0x04c00000u, 0x1ba00000u, 0xbb700000u, 0x4a980000u, 0xc3bc0000u, 0xa6020000u, 0x6d010000u, 0xee818000u, 0x29c34000u, 0x9520e000u, 0x42b23000u, 0xe7b9f800u, 0x0d0dc400u, 0x3fb92200u, 0x110d1300u, 0x19bbee80u, 0x3c0cadc0u, 0x973a4a60u, 0xc5cf7ef0u, 0x3a180008u, 0x0b7c0004u, 0xa3a20006u, 0x7771000du},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0x90000000u, 0x08000000u, 0x64000000u, 0x6a000000u, 0x89000000u, 0xa5800000u, 0xcb400000u, 0x18200000u, 0xad900000u, 0xaf880000u, 0x72f40000u, 0x25820000u, 0x0b430000u, 0xb8228000u, 0x3d924000u, 0xa7882000u, 0x16f59000u, 0x4f83a800u, 0x82412400u, 0x1da01600u, 0xf6d16d00u, 0xbfa84080u, 0xbb672640u, 0xe0091620u, 0xf0b4efd0u, 0x38228008u, 0xfd92400cu, 0x0788200au, 0x86f59009u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0xd0000000u, 0x48000000u, 0x8c000000u, 0xd6000000u, 0x39000000u, 0xd5800000u, 0x32400000u, 0xb2a00000u, 0x72100000u, 0x53d80000u, 0x82cc0000u, 0xcb820000u, 0x47430000u, 0x91208000u, 0xa9534000u, 0x7cf92000u, 0x4e9e3000u, 0xfcf95800u, 0x8e9fe400u, 0xdcf9d600u, 0x5e9c8900u, 0x94f96a80u, 0xd29fb840u, 0x42f9b760u, 0xeb9c9f30u, 0x97788008u, 0xd9df400cu, 0x25db2002u, 0xabcd300du},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0x50000000u, 0xd8000000u, 0xf4000000u, 0x3e000000u, 0x95000000u, 0x8f800000u, 0x3d400000u, 0xf3200000u, 0x2ef00000u, 0xadc80000u, 0x0a0c0000u, 0x8b220000u, 0x4af30000u, 0x6bc88000u, 0x3b0d4000u, 0xe2a16000u, 0x16b0d000u, 0x29687800u, 0xbdbf1400u, 0x33cb5e00u, 0x0f0c2500u, 0xfca1b480u, 0xd3b0afc0u, 0x7eeb6920u, 0x74fe4d30u, 0xfee87808u, 0xb4ff140cu, 0xdeeb5e02u, 0xe4fc2505u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0xb0000000u, 0x98000000u, 0xa4000000u, 0x7a000000u, 0xd5000000u, 0x02800000u, 0x60400000u, 0x51e00000u, 0x88700000u, 0x8c280000u, 0x47c40000u, 0x0be20000u, 0xad710000u, 0xb6aa8000u, 0x3386c000u, 0xb8006000u, 0x54039000u, 0x42036800u, 0xc1019400u, 0xe0826a00u, 0x11431100u, 0x2960af80u, 0x3d3175c0u, 0xdf4a3aa0u, 0xaff49e10u, 0xd62b6808u, 0x62c59404u, 0x31606a0au, 0xd932110bu},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0x30000000u, 0x18000000u, 0x34000000u, 0x8a000000u, 0x9d000000u, 0x67800000u, 0x82400000u, 0x40e00000u, 0x60f00000u, 0x91480000u, 0x29440000u, 0x2d620000u, 0xbfb30000u, 0x162a8000u, 0xfbf4c000u, 0xe4ca6000u, 0xc207d000u, 0x2002a800u, 0xf001b400u, 0xb8037e00u, 0x04021900u, 0x92034b80u, 0xa90327c0u, 0xed81f320u, 0x1f40d810u, 0x27602808u, 0xe2b1740cu, 0xd1ab1e0au, 0x49b6c903u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0xd0000000u, 0x08000000u, 0x4c000000u, 0x02000000u, 0xb5000000u, 0x36800000u, 0xc2c00000u, 0x14200000u, 0x07500000u, 0x1bf80000u, 0x50340000u, 0x48a20000u, 0xac910000u, 0xd35b8000u, 0xbca74000u, 0x7bfa2000u, 0xc0343000u, 0xa0a18800u, 0x30909400u, 0xd95b7a00u, 0x45a57b00u, 0x4f7a7880u, 0xb7f6f940u, 0x82013de0u, 0xf502dfd0u, 0xd6820808u, 0x12c3d404u, 0x1c235a0eu, 0x4b504b0du},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0x50000000u, 0x68000000u, 0x4c000000u, 0x76000000u, 0xf7000000u, 0x36800000u, 0xd7400000u, 0x87e00000u, 0xef300000u, 0xa3a80000u, 0xd5440000u, 0x23aa0000u, 0x15470000u, 0xc3a98000u, 0x45464000u, 0xaba82000u, 0x09477000u, 0xdda9f800u, 0xfe44ac00u, 0xeb292200u, 0x2907f100u, 0x6ccb3d80u, 0xc6344dc0u, 0xcf61b320u, 0x137318d0u, 0xeccb3d88u, 0x06344dccu, 0x2f61b32eu, 0x437318d5u},
    {0x80000000u, 0x40000000u, 0x60000000u, 0x90000000u, 0xc8000000u, 0x74000000u, 0x52000000u, 0x03000000u, 0xeb800000u, 0x6f400000u, 0x64600000u, 0xdaf00000u, 0x17980000u, 0x297c0000u, 0xa59a0000u, 0xfa7d0000u, 0xe61b8000u, 0x713f4000u, 0x1878a000u, 0xdcce9000u, 0xb661e800u, 0x99f29c00u, 0x9c184600u, 0xd63e2100u, 0x09fa5780u, 0x548e0ac0u, 0xa380a9e0u, 0x5b413f30u, 0x56625788u, 0x49f20ac4u, 0x341aa9e6u, 0x323c3f39u},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0xd0000000u, 0xb8000000u, 0x04000000u, 0x6e000000u, 0x97000000u, 0xf2800000u, 0xedc00000u, 0x13600000u, 0x5c900000u, 0xdb580000u, 0x31e40000u, 0x09da0000u, 0xcc270000u, 0x02b88000u, 0x44b44000u, 0x0fe26000u, 0xe6505000u, 0x9ab9d800u, 0x50b50c00u, 0x79e29200u, 0xa552fb00u, 0xbe38bf80u, 0x2e77d940u, 0xf6000ae0u, 0x830112d0u, 0x84803f88u, 0xaec3994cu, 0x37e26aeau, 0x225142ddu},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0x30000000u, 0x68000000u, 0xec000000u, 0x22000000u, 0x2b000000u, 0x36800000u, 0x9d400000u, 0x6a200000u, 0x16700000u, 0x4de80000u, 0x330c0000u, 0x936a0000u, 0x824f0000u, 0x3b498000u, 0x8f3fc000u, 0x28202000u, 0xcd707000u, 0xf36aa800u, 0x724fdc00u, 0xb34bf200u, 0x533e6900u, 0x62207a80u, 0x0a7140c0u, 0xe7ea6520u, 0xc40d90f0u, 0xefe9fa88u, 0xd80e80ccu, 0x45ea452eu, 0x2f0de0f3u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0x30000000u, 0x28000000u, 0xd4000000u, 0x8a000000u, 0xff000000u, 0x84800000u, 0x73c00000u, 0x13200000u, 0xc2b00000u, 0xfb380000u, 0x361c0000u, 0x401a0000u, 0xe0af0000u, 0x11228000u, 0x19b3c000u, 0xfdb82000u, 0x5edf9000u, 0x75b88800u, 0x7adfac00u, 0xf7baba00u, 0x61ddf300u, 0xd1387e80u, 0x391e55c0u, 0xcc9ba860u, 0x776cbeb0u, 0xa000f688u, 0xf001f9ccu, 0x08011262u, 0xe4014db3u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x50000000u, 0xb8000000u, 0x84000000u, 0x1a000000u, 0xaf000000u, 0xbd800000u, 0xdfc00000u, 0x14e00000u, 0x43500000u, 0xda380000u, 0x4e1c0000u, 0x4cda0000u, 0x364d0000u, 0x29608000u, 0xdc904000u, 0x6ed86000u, 0x5d4f5000u, 0x2ee08800u, 0xfc51ac00u, 0x7fb81e00u, 0x45dc8300u, 0xfa3a4580u, 0x5e1d6240u, 0x54dbd360u, 0xe24ec930u, 0x8b62cd88u, 0xf790ce44u, 0xc959cd6au, 0x2d8f4a35u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0x70000000u, 0x08000000u, 0xf4000000u, 0xf6000000u, 0x8b000000u, 0xc9800000u, 0x55400000u, 0x67200000u, 0xf3f00000u, 0x34780000u, 0x57440000u, 0x1ada0000u, 0xb1f50000u, 0xa9818000u, 0x6540c000u, 0x8f23a000u, 0x77f21000u, 0xca7bf800u, 0x2845fc00u, 0x255afe00u, 0x6fb67900u, 0x07233a80u, 0xc3f25ac0u, 0xdc7aed60u, 0xd34482d0u, 0xe4d94288u, 0xcef766c4u, 0x9603b36eu, 0xbb00ebd7u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0x90000000u, 0x68000000u, 0xf4000000u, 0x62000000u, 0xdf000000u, 0x79800000u, 0xdd400000u, 0x76e00000u, 0x2cf00000u, 0xcfb80000u, 0x51ec0000u, 0xc8da0000u, 0x845d0000u, 0x9b818000u, 0x42434000u, 0xef622000u, 0x61b19000u, 0xd1582800u, 0x891cac00u, 0x65626e00u, 0x0ab10900u, 0x2adbbd80u, 0x1b5d86c0u, 0x02014560u, 0x0f032470u, 0xf1821588u, 0xb9426ac4u, 0x7ce10b6eu, 0x07f3bd79u},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0x50000000u, 0x18000000u, 0xdc000000u, 0x42000000u, 0x37000000u, 0x20800000u, 0xf1400000u, 0x28600000u, 0x94900000u, 0x87880000u, 0xa83c0000u, 0x556a0000u, 0xe6ef0000u, 0xf8038000u, 0x4c024000u, 0x3a01e000u, 0xbb023000u, 0x7a816800u, 0x1a43ac00u, 0x4ae18a00u, 0x52d31900u, 0x8f682380u, 0xcded9740u, 0xfa80bfa0u, 0xda43f2b0u, 0x2ae2cb88u, 0x02d07b4cu, 0x976ad5a6u, 0x11eddbb5u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0xf0000000u, 0xf8000000u, 0x34000000u, 0x62000000u, 0xf5000000u, 0xa8800000u, 0xfcc00000u, 0x8e200000u, 0x53f00000u, 0xc7780000u, 0x95740000u, 0xb8020000u, 0xd4e50000u, 0xb2808000u, 0xfdc0c000u, 0x64a02000u, 0xaa30f000u, 0x19d8f800u, 0x0e443400u, 0x935a6200u, 0xe761f500u, 0x657a2880u, 0x40913cc0u, 0xe0022e20u, 0xd0e563f0u, 0x08809f78u, 0xccc09174u, 0x56200202u, 0x97f0e5e5u},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0xf0000000u, 0xf8000000u, 0xec000000u, 0x7e000000u, 0x61000000u, 0x5c800000u, 0xe6c00000u, 0xdda00000u, 0x2a700000u, 0x93380000u, 0x13cc0000u, 0xd3ce0000u, 0x73790000u, 0x83a08000u, 0x7b70c000u, 0x97b8a000u, 0xe90cf000u, 0x886ef800u, 0xd409ec00u, 0x3218fe00u, 0xef7ca100u, 0xc556fc80u, 0x56c516c0u, 0x4556a5a0u, 0x96c50670u, 0xe556cd38u, 0x66c542ccu, 0x1d56574eu, 0x8ac549b9u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0xb0000000u, 0x58000000u, 0x2c000000u, 0x9a000000u, 0xf9000000u, 0x3c800000u, 0xb2c00000u, 0xad200000u, 0x3a300000u, 0x89980000u, 0x448c0000u, 0x2eea0000u, 0x6f810000u, 0xef208000u, 0x2f30c000u, 0x0f182000u, 0xbf4cb000u, 0xe74a5800u, 0xcb712c00u, 0x51981a00u, 0xa88c3900u, 0x94ea1c80u, 0x268102c0u, 0x8ba07520u, 0xb1f0d630u, 0x38383398u, 0x7c7c0d8cu, 0x52524a6au, 0x3d3df141u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0xb0000000u, 0xd8000000u, 0xac000000u, 0x8e000000u, 0x09000000u, 0x9e800000u, 0xa1c00000u, 0xcaa00000u, 0x33700000u, 0x95780000u, 0x085c0000u, 0x24b60000u, 0x6a350000u, 0x43788000u, 0x6d5cc000u, 0x14362000u, 0x72f5b000u, 0xcf585800u, 0x53ec6c00u, 0xc5eeae00u, 0x40d9b900u, 0xe016c680u, 0x9045cdc0u, 0x6880e4a0u, 0x74c04a70u, 0x2220f3f8u, 0x87b0b59cu, 0x9758b816u, 0x3fecfc45u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0xf0000000u, 0xa8000000u, 0x2c000000u, 0xa2000000u, 0x2d000000u, 0xda800000u, 0xf9400000u, 0xec600000u, 0x02b00000u, 0x3d480000u, 0x825c0000u, 0x7d4a0000u, 0x62610000u, 0x8dc88000u, 0xca1c4000u, 0xa1aae000u, 0x6891f000u, 0x8c602800u, 0xb2b06c00u, 0x75484200u, 0x5e5cdd00u, 0x774a7280u, 0x6361d540u, 0xf548ce60u, 0x1e5c6fb0u, 0x974a07c8u, 0x93618b1cu, 0x5d48b92au, 0x325c0cd1u},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0x30000000u, 0xc8000000u, 0x7c000000u, 0x82000000u, 0x4f000000u, 0xbe800000u, 0xedc00000u, 0x21600000u, 0xab700000u, 0x78680000u, 0x746c0000u, 0x1e9a0000u, 0xfdcb0000u, 0x39088000u, 0x2f1cc000u, 0x4ef2e000u, 0xc5a73000u, 0x6d924800u, 0xe1d7bc00u, 0x4b7ae200u, 0x487bbf00u, 0xbc801680u, 0x62c061c0u, 0x7fe08b60u, 0x76b0a870u, 0x91088ce8u, 0xa31caaacu, 0xe4f2037au, 0xc6a7f47bu},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0x10000000u, 0x98000000u, 0x2c000000u, 0x06000000u, 0xcd000000u, 0x8a800000u, 0x1bc00000u, 0xffa00000u, 0xad500000u, 0x7af80000u, 0xb3dc0000u, 0x5b2e0000u, 0x1f290000u, 0x9d588000u, 0xf28cc000u, 0x07d62000u, 0x71f51000u, 0xd4f61800u, 0xda65ec00u, 0x632ea600u, 0xe3291d00u, 0x2358b280u, 0x038ce7c0u, 0x135641a0u, 0x8b355c50u, 0xa7d6ee78u, 0xa1f5891cu, 0x6cf6880eu, 0xe665b4b9u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x90000000u, 0x98000000u, 0x54000000u, 0x3a000000u, 0x9d000000u, 0x7e800000u, 0x7f400000u, 0x17200000u, 0xab500000u, 0x6df80000u, 0x96a40000u, 0x83d20000u, 0x71e10000u, 0xc0d88000u, 0xe0f44000u, 0x30aaa000u, 0x08059000u, 0xcc2a1800u, 0x6e451400u, 0xa78a1a00u, 0xe3554d00u, 0x01d2c680u, 0x68e1fb40u, 0xbc589520u, 0xc6b4b250u, 0xfb0a1178u, 0x1515b0e4u, 0xf272c872u, 0xb1f12cf1u},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0xb0000000u, 0x08000000u, 0x84000000u, 0xb2000000u, 0xb9000000u, 0xbe800000u, 0x4fc00000u, 0x55600000u, 0xf8f00000u, 0xac280000u, 0x66d40000u, 0xb30a0000u, 0x8bb50000u, 0xc7c88000u, 0x11e4c000u, 0xaa42e000u, 0xa591b000u, 0xd0ea8800u, 0x78854400u, 0x6c80d200u, 0x86c0c900u, 0x03e05680u, 0x83307bc0u, 0x4348ef60u, 0xa324c5f0u, 0x13a2a0a8u, 0x1ba19014u, 0x9f22d8eau, 0x2d61fc85u},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0x30000000u, 0x78000000u, 0x24000000u, 0x9e000000u, 0x47000000u, 0x67800000u, 0xf7400000u, 0xdf200000u, 0xb3100000u, 0x71680000u, 0x8c4c0000u, 0x32520000u, 0xe5d50000u, 0xaa528000u, 0x31d5c000u, 0x2c52e000u, 0x62d5f000u, 0xadd29800u, 0xf695d400u, 0x8b720600u, 0xf5c59300u, 0x42ba6180u, 0x3dd96440u, 0xdea0bea0u, 0xe750d750u, 0x37c84fc8u, 0xbf1c9b1cu, 0x839a1d9au, 0x09c94ec9u},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0xb0000000u, 0x78000000u, 0x9c000000u, 0xee000000u, 0x1b000000u, 0xcb800000u, 0xc3400000u, 0xc7a00000u, 0x05100000u, 0x88680000u, 0xc4740000u, 0x225a0000u, 0x3da10000u, 0x345a8000u, 0x7aa1c000u, 0xf1da6000u, 0x12e17000u, 0x85fa1800u, 0x48b1ec00u, 0x2432f600u, 0x92d5f700u, 0x45803d80u, 0xa8403440u, 0x94207a20u, 0xea50f150u, 0xd9c81248u, 0x46648524u, 0x8fb24812u, 0x21952485u},
    {0x80000000u, 0x40000000u, 0x60000000u, 0x10000000u, 0x58000000u, 0x7c000000u, 0xc2000000u, 0xe1000000u, 0x0d800000u, 0xd7c00000u, 0x2aa00000u, 0xf5300000u, 0x9ba80000u, 0xc0f40000u, 0x20c60000u, 0x702f0000u, 0x48668000u, 0x241f4000u, 0xbe4ee000u, 0x232b5000u, 0xec28b800u, 0xda342c00u, 0xfde6fa00u, 0xdfdf8d00u, 0x6eee1780u, 0x5b1b0ac0u, 0xe0000520u, 0x500093f0u, 0x38008488u, 0x6c008e04u, 0x9a000bceu, 0x9d00d8ebu},
    {0x80000000u, 0x40000000u, 0x20000000u, 0x30000000u, 0xb8000000u, 0xac000000u, 0x72000000u, 0xb1000000u, 0x03800000u, 0xd2c00000u, 0xc1600000u, 0x9b900000u, 0x4e480000u, 0x0b740000u, 0x864e0000u, 0x3f0b0000u, 0x68068000u, 0x447f4000u, 0x7648a000u, 0xe7747000u, 0xd44e9800u, 0xbe0b9c00u, 0xd3864a00u, 0x3abf5d00u, 0xc528d180u, 0xcde413c0u, 0x99865ae0u, 0x67bfd550u, 0x94a8c528u, 0x9e24cde4u, 0xe3669986u, 0x82ef67bfu},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0x70000000u, 0x88000000u, 0x44000000u, 0x4a000000u, 0x47000000u, 0xdd800000u, 0x42400000u, 0xc3200000u, 0x77100000u, 0x75b80000u, 0x966c0000u, 0x715e0000u, 0xfc950000u, 0xa6e68000u, 0xd9f9c000u, 0x28386000u, 0x142cb000u, 0x527e6800u, 0xfb853400u, 0x5b5e4200u, 0x0b95c300u, 0x1366f780u, 0xafb9b540u, 0x2918f6a0u, 0x603cc150u, 0xb0469498u, 0x68a9927cu, 0x34a09b66u, 0xc250ebb9u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0x50000000u, 0xd8000000u, 0xfc000000u, 0xf6000000u, 0xd5000000u, 0xbf800000u, 0x2c400000u, 0xeee00000u, 0x09700000u, 0x19080000u, 0x21640000u, 0xad6a0000u, 0xd3130000u, 0x22828000u, 0x9707c000u, 0x98e0a000u, 0x1c709000u, 0x8688f800u, 0x5d24ac00u, 0x9b8a2e00u, 0x26632900u, 0xcd8ac980u, 0x63633940u, 0x8a0af160u, 0xe323b530u, 0x4aea8fe8u, 0xc3534414u, 0x1a623a62u, 0x1b774b77u},
    {0x80000000u, 0x40000000u, 0x60000000u, 0x50000000u, 0x58000000u, 0xac000000u, 0x6a000000u, 0x85000000u, 0xfb800000u, 0xa8c00000u, 0x84200000u, 0xae300000u, 0x4b080000u, 0xe0740000u, 0x10860000u, 0x388f0000u, 0xfc2e8000u, 0x320b4000u, 0x2980e000u, 0x91c01000u, 0x2da03800u, 0x7ff0fc00u, 0x06a83200u, 0xcf842900u, 0x4e2e9180u, 0x5b0b2dc0u, 0xd800ffa0u, 0xec0046f0u, 0x0a00af28u, 0xd5001e44u, 0xa380038eu, 0x04c074fbu},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0x50000000u, 0xe8000000u, 0x44000000u, 0x5e000000u, 0xad000000u, 0xef800000u, 0x68400000u, 0x84600000u, 0xfe500000u, 0xfd280000u, 0x07f40000u, 0x2c620000u, 0xda4f0000u, 0x53068000u, 0x12dfc000u, 0x6f802000u, 0xa8403000u, 0x24602800u, 0xae501400u, 0x15283a00u, 0x43f41100u, 0x72621780u, 0x774f2b40u, 0xbc86bbe0u, 0x7a9fda10u, 0xebe00118u, 0x56100f94u, 0xd948174au, 0xa9a415fdu},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0xb0000000u, 0x18000000u, 0x04000000u, 0xda000000u, 0x09000000u, 0x22800000u, 0xe8400000u, 0xbc600000u, 0x0e300000u, 0x7b580000u, 0x378c0000u, 0x14c20000u, 0x874d0000u, 0x99d48000u, 0xbfb94000u, 0x18802000u, 0x91403000u, 0xe6e01800u, 0x52702c00u, 0x05380600u, 0x34bc0100u, 0x971a3680u, 0x51810240u, 0x13f688a0u, 0xde847a10u, 0x466c8f18u, 0x1745738cu, 0x91fa26d6u, 0x73f111e3u},
    {0x80000000u, 0x40000000u, 0x20000000u, 0x50000000u, 0x88000000u, 0x9c000000u, 0x2e000000u, 0x05000000u, 0xab800000u, 0x1c400000u, 0x6e200000u, 0x25100000u, 0xfba80000u, 0x94040000u, 0xf26e0000u, 0x0b070000u, 0xfeaa8000u, 0x3fd1c000u, 0xee202000u, 0x65101000u, 0xdba80800u, 0xc4041400u, 0x7a6e2200u, 0x97072700u, 0xd0aa8b80u, 0x3ad1c140u, 0x45a00ae0u, 0x79501710u, 0xb5881388u, 0xe1141d44u, 0x81c61ceau, 0x03030201u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0x50000000u, 0xc8000000u, 0x3c000000u, 0x3e000000u, 0x67000000u, 0xf9800000u, 0xcc400000u, 0x66600000u, 0xb3100000u, 0xaba80000u, 0x5d240000u, 0xc4fe0000u, 0xb8cf0000u, 0x66bb8000u, 0x71a8c000u, 0x10602000u, 0x28103000u, 0x4c280800u, 0xa6641400u, 0x931e3200u, 0xfb9f0f00u, 0x95738f80u, 0xf89cd9c0u, 0x86b61e60u, 0x01bb0310u, 0x880d9198u, 0xdc13f8c4u, 0x4e6db8eau, 0xff03e849u},
    {0x80000000u, 0x40000000u, 0x20000000u, 0xb0000000u, 0x58000000u, 0x44000000u, 0x7e000000u, 0x69000000u, 0x5b800000u, 0xdc400000u, 0x5a200000u, 0x87100000u, 0xdad80000u, 0x9bec0000u, 0xbc420000u, 0xca0f0000u, 0x6f7c8000u, 0xc6d9c000u, 0xa1a02000u, 0xab501000u, 0xf8f80800u, 0xe8fc2c00u, 0x409a1600u, 0x7ce31100u, 0xf6be9f80u, 0xb996da40u, 0xcf7cb6e0u, 0x36d9e710u, 0xd9a03e88u, 0x5f501dc4u, 0xdef828b6u, 0xc5fc1bfbu},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0xb0000000u, 0x48000000u, 0x74000000u, 0xc2000000u, 0xe7000000u, 0xb5800000u, 0xba400000u, 0x9b200000u, 0xa3d00000u, 0x2f180000u, 0x81840000u, 0xd82a0000u, 0xcc190000u, 0x5e078000u, 0xe138c000u, 0xd8982000u, 0x9cc41000u, 0x568a2800u, 0x65892c00u, 0xa23f9200u, 0xb76cdd00u, 0xedaa1080u, 0x365929c0u, 0x65278560u, 0xf2e8c290u, 0xbf8014c8u, 0x694025f4u, 0x4ca01346u, 0x4e9035a1u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0xf0000000u, 0x98000000u, 0xb4000000u, 0x52000000u, 0x07000000u, 0xbf800000u, 0x5a400000u, 0x3b200000u, 0x91d00000u, 0xd3380000u, 0xfdec0000u, 0x954a0000u, 0x58f10000u, 0xb5df8000u, 0x091dc000u, 0x86b82000u, 0xa4ac1000u, 0x7bea2800u, 0xd0613c00u, 0x2847a600u, 0x8c61ed00u, 0x166a3480u, 0xcd2111c0u, 0x0ce787e0u, 0xb7f1ea90u, 0x667208c8u, 0x151d1974u, 0x1895884eu, 0x15ecc2bbu},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0x70000000u, 0xf8000000u, 0x4c000000u, 0xa6000000u, 0x89000000u, 0x6e800000u, 0x1a400000u, 0x17600000u, 0x4bf00000u, 0xa2f80000u, 0x7c5c0000u, 0x7e360000u, 0x551b0000u, 0x40808000u, 0x272d4000u, 0x93982000u, 0x7eac3000u, 0x524e3800u, 0x43071c00u, 0xd1d6be00u, 0x75c65300u, 0xd7e08980u, 0xacdd5240u, 0xd16003a0u, 0x72f02a90u, 0xd47803d8u, 0x5a1c1dfcu, 0x37563f3eu, 0xdbeb2e57u},
    {0x80000000u, 0x40000000u, 0x20000000u, 0x30000000u, 0xb8000000u, 0x3c000000u, 0xde000000u, 0xdf000000u, 0x29800000u, 0x32400000u, 0xe9200000u, 0x62900000u, 0x71d80000u, 0x5e3c0000u, 0x9f2e0000u, 0x09e70000u, 0x026b8000u, 0x5176c000u, 0x5ef82000u, 0xafac1000u, 0x81760800u, 0xb69b0c00u, 0x3be5ae00u, 0xeb41cf00u, 0x33eb9780u, 0x2f36e7c0u, 0xf1d82260u, 0x1e3c1090u, 0xbf2e1c48u, 0x39e71ba4u, 0xba6b85f6u, 0x6d76ef4fu},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0xd0000000u, 0xf8000000u, 0x3c000000u, 0x6e000000u, 0x19000000u, 0x50800000u, 0xca400000u, 0x7b200000u, 0xafd00000u, 0x97a80000u, 0x4b9c0000u, 0x55ae0000u, 0x64ef0000u, 0xf0288000u, 0x68524000u, 0x64082000u, 0x820c1000u, 0x8f262800u, 0x75a33400u, 0xf4aebe00u, 0xa8614f00u, 0x842ebb80u, 0xf2215640u, 0xa70e9c20u, 0xb1f15690u, 0xa6a6a8c8u, 0xdf6d40f4u, 0xcd88886au, 0x68c27fa7u},
    {0x80000000u, 0x40000000u, 0x60000000u, 0xd0000000u, 0xc8000000u, 0xbc000000u, 0x4e000000u, 0x57000000u, 0x80800000u, 0x0a400000u, 0xfd200000u, 0x8db00000u, 0xffa80000u, 0xa6840000u, 0x110e0000u, 0x4bdf0000u, 0x74d78000u, 0xb8724000u, 0x84082000u, 0x8a741000u, 0xbd061800u, 0xedab3400u, 0x2fd1b200u, 0x6ed96f00u, 0xad59b380u, 0x05ed45c0u, 0x23ff9820u, 0x38b66690u, 0x8e263548u, 0x771b286cu, 0x30f9866au, 0x121d6761u},
    {0x80000000u, 0x40000000u, 0x20000000u, 0xb0000000u, 0xa8000000u, 0xd4000000u, 0xfa000000u, 0xf9000000u, 0x92800000u, 0x19400000u, 0x42a00000u, 0x21500000u, 0x8ef80000u, 0xa7040000u, 0x59920000u, 0x36f90000u, 0x2b2e8000u, 0xffd04000u, 0x51922000u, 0x12f91000u, 0x592e8800u, 0x62d06c00u, 0x91120a00u, 0x26b92500u, 0x730eb680u, 0xa3c05240u, 0xcfca2ea0u, 0xb9ad2350u, 0xe6c4a628u, 0x136d5a14u, 0x338e8d1eu, 0xd7804a91u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0xb0000000u, 0x58000000u, 0x1c000000u, 0x72000000u, 0x4f000000u, 0xa1800000u, 0x77400000u, 0x4da00000u, 0xbd300000u, 0xaef80000u, 0x369c0000u, 0x8ab60000u, 0xa8850000u, 0x0fe18000u, 0xea0dc000u, 0xf3362000u, 0x83c51000u, 0xd041b800u, 0xa83dec00u, 0xa44e3600u, 0xde191700u, 0x6557a480u, 0xf288ffc0u, 0xa4d79e60u, 0x75c8cad0u, 0x517797e8u, 0x64f8c08cu, 0xd58f8ddeu, 0x0164eb77u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x50000000u, 0x88000000u, 0x34000000u, 0xa2000000u, 0x03000000u, 0x41800000u, 0xf7400000u, 0x03a00000u, 0x04100000u, 0x9a080000u, 0x4f140000u, 0x0fb20000u, 0xea550000u, 0xd73b8000u, 0x13a1c000u, 0x2c122000u, 0xfe451000u, 0x6533a800u, 0x38b5d400u, 0x09a00200u, 0x23101d00u, 0x51880080u, 0xdf5414c0u, 0x67923260u, 0x2e0530d0u, 0xad13a868u, 0xace5c1c4u, 0xfb8816e2u, 0xa8543e15u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0xd0000000u, 0xb8000000u, 0x1c000000u, 0x82000000u, 0xfb000000u, 0xed800000u, 0x87400000u, 0xffa00000u, 0x24300000u, 0xde480000u, 0x992c0000u, 0xc6e60000u, 0xd2dd0000u, 0x64938000u, 0x59a7c000u, 0x01462000u, 0xaaed1000u, 0xd8dbb800u, 0xeb8bf400u, 0x92200e00u, 0xe3701700u, 0xc1e81880u, 0x6d1c0ac0u, 0xa0ae1560u, 0x57f126d0u, 0x20759f68u, 0x707af7ccu, 0x8855acf2u, 0x740ad79bu},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0x10000000u, 0x48000000u, 0xac000000u, 0x06000000u, 0x95000000u, 0x05800000u, 0xc9400000u, 0x3be00000u, 0x08100000u, 0xcc680000u, 0xb6740000u, 0xcd5e0000u, 0xe1a70000u, 0x635c8000u, 0xa8e1c000u, 0x98be2000u, 0x00b73000u, 0x44b4a800u, 0xfed5c400u, 0x25803200u, 0x19401b00u, 0xd3e02980u, 0xb4102140u, 0x82681360u, 0x8f741950u, 0xcede0f78u, 0xbde72744u, 0x5d3cb27au, 0x69b1dfcdu},
    {0x80000000u, 0x40000000u, 0x60000000u, 0xd0000000u, 0xf8000000u, 0x34000000u, 0x1a000000u, 0xff000000u, 0xf3800000u, 0x93400000u, 0x2da00000u, 0x3e700000u, 0x3d480000u, 0x88cc0000u, 0x52b20000u, 0x8d910000u, 0xce358000u, 0x750cc000u, 0x94922000u, 0x84a11000u, 0x5cdd9800u, 0xd8b0f400u, 0xeae81e00u, 0xd9bc1d00u, 0x047a1e80u, 0x721d0bc0u, 0x532782e0u, 0x0dede9d0u, 0x8e6fade8u, 0x1521e05cu, 0x44dd8bb2u, 0x7cb0e2e3u},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0x10000000u, 0x28000000u, 0xfc000000u, 0xb2000000u, 0x5b000000u, 0x3f800000u, 0x7f400000u, 0x89e00000u, 0x22700000u, 0xb3680000u, 0xa3a40000u, 0xdd360000u, 0xfaad0000u, 0xe1a38000u, 0x7e6ec000u, 0x71562000u, 0xc09d3000u, 0x36ab9800u, 0xcbfac400u, 0x81682a00u, 0x38a40f00u, 0x82b63480u, 0x95ed12c0u, 0x404385e0u, 0xa01ee0d0u, 0x703e2ef8u, 0x38392e5cu, 0xd41dbb3au, 0x4e17f339u},
    {0x80000000u, 0x40000000u, 0x60000000u, 0x30000000u, 0x08000000u, 0x4c000000u, 0xf6000000u, 0x7f000000u, 0x76800000u, 0x19400000u, 0x11a00000u, 0x7bf00000u, 0x8af80000u, 0xa7540000u, 0x42ae0000u, 0xcb170000u, 0xe4a58000u, 0x8c124000u, 0xd6562000u, 0x2f431000u, 0x4e8b9800u, 0x5d454c00u, 0xabd3a200u, 0xf2e14300u, 0x83058580u, 0xc8e243c0u, 0x4a2e27a0u, 0xa1570950u, 0x1585a3e8u, 0xa1a25e3cu, 0x338e209eu, 0xa6a73345u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x70000000u, 0xb8000000u, 0x7c000000u, 0x4a000000u, 0xf3000000u, 0x90800000u, 0x81400000u, 0x5fa00000u, 0xfb900000u, 0x5dd80000u, 0x8cec0000u, 0x5b360000u, 0xc4b10000u, 0xdf338000u, 0x52974000u, 0x166e2000u, 0x891d1000u, 0x7ba5a800u, 0x1db65c00u, 0x2c858e00u, 0x2b664f00u, 0x7cfd9a80u, 0xa31a70c0u, 0x18938220u, 0xe5077350u, 0x19b62368u, 0xfaf11124u, 0x4213a7d6u, 0xd7477cabu},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0xb0000000u, 0x88000000u, 0xd4000000u, 0xea000000u, 0xb7000000u, 0xf5800000u, 0xa5400000u, 0xfea00000u, 0x7e900000u, 0x3eb80000u, 0x9ef40000u, 0x2e820000u, 0xa6d90000u, 0x729d8000u, 0x98c9c000u, 0x2fba2000u, 0xda6d1000u, 0x7f3fa800u, 0x81c0ec00u, 0xff3f8200u, 0xc1c0e500u, 0x5f3fb280u, 0x71c0d1c0u, 0xd73f9760u, 0xa5c0e050u, 0x3d3faf28u, 0x12c0fb64u, 0xc8bfa24eu, 0xb780ea2du},
    {0x80000000u, 0x40000000u, 0x20000000u, 0x50000000u, 0x08000000u, 0x34000000u, 0x1a000000u, 0xd1000000u, 0xac800000u, 0x57400000u, 0x43a00000u, 0x18d00000u, 0x0d480000u, 0xb2b40000u, 0xe4620000u, 0x52010000u, 0xc5668000u, 0xe6e94000u, 0x8e0a2000u, 0xdb251000u, 0x55ec8800u, 0x9f8c5400u, 0x06c6a200u, 0xbe395d00u, 0xa3422e80u, 0x39913040u, 0xb98ea120u, 0xf98d4cd0u, 0xd9a03468u, 0x89d02f74u, 0x81c826f2u, 0xb5f4193du},
    {0x80000000u, 0x40000000u, 0x60000000u, 0xf0000000u, 0x08000000u, 0xe4000000u, 0xe6000000u, 0x07000000u, 0x10800000u, 0x7d400000u, 0x5da00000u, 0x08f00000u, 0x21180000u, 0x37940000u, 0xfdfa0000u, 0xd8ef0000u, 0xb9258000u, 0x2be14000u, 0xf7c22000u, 0xddcb1000u, 0x48e79800u, 0x412a7c00u, 0xc7a5a200u, 0xf5a16900u, 0x3ce20180u, 0x5f7b2dc0u, 0x2cdf9e20u, 0xe70e5a50u, 0xa0e78ce8u, 0x152a6afcu, 0x49a58de6u, 0xe6a17f75u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0xb0000000u, 0x38000000u, 0xac000000u, 0xa2000000u, 0xcf000000u, 0x57800000u, 0x2fc00000u, 0x63a00000u, 0x51b00000u, 0x16e80000u, 0xd5740000u, 0xf4e20000u, 0xfa130000u, 0x33448000u, 0x5dc74000u, 0xc4c4a000u, 0x02077000u, 0xbf64a800u, 0x4fb75c00u, 0x338ca600u, 0xf9c37700u, 0x32ee8e80u, 0xe31044c0u, 0x358a1b60u, 0xc0a70f30u, 0x8406a388u, 0x46646b5cu, 0xd9680e32u, 0x26b40201u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0x10000000u, 0x78000000u, 0x6c000000u, 0x7e000000u, 0xff000000u, 0x18800000u, 0xc0c00000u, 0x7ca00000u, 0x5ab00000u, 0xd9b80000u, 0xc7040000u, 0x94f20000u, 0x8eed0000u, 0xebe28000u, 0x5676c000u, 0x0b62a000u, 0x3ab6f000u, 0x29c2a800u, 0x8f06f400u, 0x90fab600u, 0xe4c2ef00u, 0x06a8a980u, 0xcf9fd0c0u, 0x2c722fa0u, 0x9e2d20f0u, 0xcf429088u, 0x70c6c65cu, 0xd4da8ee6u, 0x6eb2c39du},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0x30000000u, 0xd8000000u, 0xf4000000u, 0xd2000000u, 0xab000000u, 0x98800000u, 0x90c00000u, 0xeca00000u, 0x82f00000u, 0xe7e80000u, 0x2a040000u, 0xaf3e0000u, 0x32b70000u, 0xfff28000u, 0x7e46c000u, 0x4d72a000u, 0x4186f000u, 0x93528800u, 0x3cb6fc00u, 0x0a9abe00u, 0x5b82c100u, 0xe46c8a80u, 0xfa01ebc0u, 0x27682ca0u, 0x8ec40ff0u, 0x319e3788u, 0x2b471f4cu, 0x589aa672u, 0x3082d9cdu},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x30000000u, 0x08000000u, 0x0c000000u, 0x72000000u, 0xf9000000u, 0x4a800000u, 0x86c00000u, 0x14e00000u, 0x7db00000u, 0x0f280000u, 0x8dec0000u, 0xe70a0000u, 0x11830000u, 0xad578000u, 0xecdec000u, 0x99b7a000u, 0xe16ed000u, 0x3e9f8800u, 0x5082dc00u, 0xa3958a00u, 0xb401df00u, 0x36421680u, 0x271f2140u, 0xf195a420u, 0x3d01d0f0u, 0xd4c22918u, 0x9ddf139cu, 0x9f75a0d2u, 0xb5b1efe7u},
    {0x80000000u, 0x40000000u, 0x60000000u, 0x50000000u, 0x28000000u, 0xe4000000u, 0x1e000000u, 0x0d000000u, 0x4f800000u, 0x03c00000u, 0xb9e00000u, 0xcad00000u, 0xd8780000u, 0xbc2c0000u, 0xe27e0000u, 0x8f410000u, 0x90ef8000u, 0xbb1c4000u, 0xe68fa000u, 0x320c5000u, 0xe717b800u, 0x14f04400u, 0xf511b200u, 0xc39d7d00u, 0x99803580u, 0xfac03e40u, 0xa0600660u, 0x70102eb0u, 0x18183018u, 0x9c3c0804u, 0xd2660c06u, 0xf77d1e0fu},
    {0x80000000u, 0x40000000u, 0x20000000u, 0xb0000000u, 0x38000000u, 0x2c000000u, 0xd2000000u, 0x8d000000u, 0x70800000u, 0x14c00000u, 0xb2e00000u, 0x51f00000u, 0xf6280000u, 0x0b740000u, 0x23c20000u, 0x8b7b0000u, 0x63858000u, 0xab51c000u, 0xd3e5a000u, 0x9361d000u, 0xffada800u, 0x4125fc00u, 0x72a7a600u, 0x31daf700u, 0x66481280u, 0x83441440u, 0x378a2ea0u, 0x753f0170u, 0x3c8f8a18u, 0x56aef90cu, 0xb78a1992u, 0x353f20d1u},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0x50000000u, 0xd8000000u, 0xec000000u, 0xf2000000u, 0x65000000u, 0x87800000u, 0x05c00000u, 0x48a00000u, 0xcb100000u, 0x58f80000u, 0xb3340000u, 0x84d20000u, 0xc9130000u, 0xd5f58000u, 0x50944000u, 0x470da000u, 0xfaa07000u, 0x0e5fb800u, 0xef736400u, 0x3e8a0e00u, 0xf8371f00u, 0x1c5f9280u, 0x1a737640u, 0x010a0b60u, 0x41f71330u, 0x7eff9748u, 0x58637ef4u, 0x2c7233f6u, 0x92031479u},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0x90000000u, 0x58000000u, 0xc4000000u, 0x66000000u, 0x3b000000u, 0x39800000u, 0xd7c00000u, 0x10a00000u, 0xbb700000u, 0xf9f80000u, 0x77f40000u, 0x80a60000u, 0xe30d0000u, 0x3db48000u, 0x11c64000u, 0xbbcca000u, 0xdaf27000u, 0xea4a8800u, 0x014f5400u, 0x00a61e00u, 0x230d2500u, 0x9db4a780u, 0x81c65bc0u, 0xe3cca1e0u, 0x1ef27a30u, 0x8c4a9bc8u, 0x3a4f41ecu, 0x39262a36u, 0xf4cd23d1u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0x10000000u, 0xb8000000u, 0xb4000000u, 0xfa000000u, 0x47000000u, 0xd1800000u, 0x1fc00000u, 0xe2e00000u, 0x94100000u, 0x4a580000u, 0x0f240000u, 0xcd8e0000u, 0xe9bb0000u, 0xebe48000u, 0xf8a64000u, 0xc35ca000u, 0x23925000u, 0xa48a9800u, 0xd50d5400u, 0x3ae03600u, 0x70103900u, 0xe8582880u, 0xec2438c0u, 0x5e0e24e0u, 0x057b3b30u, 0x2284b258u, 0x34767334u, 0xba64be4eu, 0xa766713du},
    {0x80000000u, 0x40000000u, 0x60000000u, 0x50000000u, 0xb8000000u, 0x14000000u, 0xd2000000u, 0x6d000000u, 0x25800000u, 0x73c00000u, 0x54e00000u, 0x38500000u, 0x54380000u, 0xb2440000u, 0x3d7e0000u, 0x9dbf0000u, 0x67958000u, 0x86ad4000u, 0x554da000u, 0x71b95000u, 0xc18bb800u, 0x69824400u, 0xa5801600u, 0x33c00100u, 0x34e00280u, 0x68500a40u, 0xec3813e0u, 0xa64402b0u, 0xef7e28d8u, 0xf0bf09a4u, 0x42158956u, 0xf56d7e75u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0xf0000000u, 0x38000000u, 0x2c000000u, 0x86000000u, 0x79000000u, 0xe2800000u, 0xd8c00000u, 0xafe00000u, 0xc0100000u, 0xa0280000u, 0x10140000u, 0xc8720000u, 0x14490000u, 0xaa698000u, 0xff0ec000u, 0x9ba1a000u, 0x3a0ad000u, 0x777b9800u, 0x6f97ec00u, 0x60001600u, 0xb0002700u, 0xd8001780u, 0xdc002940u, 0xbe001720u, 0x55002370u, 0x648032d8u, 0xa1c01874u, 0x4d603b52u, 0x18d00231u},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0x30000000u, 0x48000000u, 0x34000000u, 0x3e000000u, 0x1b000000u, 0xe0800000u, 0xe2c00000u, 0xd3a00000u, 0xc6500000u, 0xa7080000u, 0x0acc0000u, 0xf7e60000u, 0x60010000u, 0xf0188000u, 0xa80ac000u, 0x0430a000u, 0x7656f000u, 0x2f7e9800u, 0xdecbfc00u, 0xf9880a00u, 0x330c3100u, 0x24c62580u, 0x749107c0u, 0xccb0a5a0u, 0x5096f370u, 0x6adea348u, 0x079bffe4u, 0xc8003d0au, 0xf4003797u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0xf0000000u, 0x98000000u, 0x9c000000u, 0x4e000000u, 0x59000000u, 0x07800000u, 0xddc00000u, 0xdea00000u, 0x1a300000u, 0x23080000u, 0x34a40000u, 0xa13a0000u, 0x8bc50000u, 0xdb958000u, 0x73d04000u, 0x57bda000u, 0x75847000u, 0xfaafa800u, 0x38154c00u, 0xac280e00u, 0xf6542b00u, 0x35123d80u, 0xd1910d40u, 0x1887b460u, 0x97414630u, 0x9eba05c8u, 0xfa0517bcu, 0xf335b68au, 0x5ce040d5u},
    {0x80000000u, 0x40000000u, 0x20000000u, 0x10000000u, 0x08000000u, 0x84000000u, 0x92000000u, 0x91000000u, 0xbd800000u, 0x8cc00000u, 0x61600000u, 0xc5b00000u, 0x30d80000u, 0x6f6c0000u, 0x4af60000u, 0x0a530000u, 0x5d2d8000u, 0x8bc04000u, 0x9fdba000u, 0x45935000u, 0x70f62800u, 0x4f531400u, 0x5aad8a00u, 0x02006500u, 0xd93b8680u, 0x19e35540u, 0x0ece23e0u, 0xf84f1370u, 0xfc63bd38u, 0x2e4f775cu, 0x9f5812eeu, 0x32ac3ff7u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0xf0000000u, 0x78000000u, 0xac000000u, 0x3a000000u, 0x0d000000u, 0xf1800000u, 0x6cc00000u, 0xf5200000u, 0x9df00000u, 0x76a80000u, 0x08640000u, 0x141a0000u, 0xb6230000u, 0xc75f8000u, 0x84944000u, 0x3145a000u, 0xa3b77000u, 0x659a2800u, 0x1ae30c00u, 0x127f9600u, 0xe9645700u, 0x3fedb080u, 0x07d35840u, 0x4b801ae0u, 0xa1c01470u, 0x24a01728u, 0x01302b4cu, 0xfb883062u, 0x39940d25u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0x30000000u, 0x98000000u, 0x6c000000u, 0xaa000000u, 0x83000000u, 0xd7800000u, 0xc0c00000u, 0xa1600000u, 0x30d00000u, 0x99280000u, 0x8cf40000u, 0x9b4a0000u, 0xfbdb0000u, 0x8ae88000u, 0x12644000u, 0x7f42a000u, 0x35af5000u, 0x87e21800u, 0x28ef1c00u, 0xb5429e00u, 0xc6af5700u, 0x28622c80u, 0xb42f2bc0u, 0x2622a760u, 0x197f5cf0u, 0xccca1bb8u, 0x7b1b3704u, 0xcb889c92u, 0x12b443c9u},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0x30000000u, 0x28000000u, 0x8c000000u, 0x2e000000u, 0xc3000000u, 0xae800000u, 0x79c00000u, 0x9d200000u, 0xe5d00000u, 0x0b680000u, 0xd2ec0000u, 0x1fa20000u, 0xe2690000u, 0x4d328000u, 0x3dd8c000u, 0xcf30a000u, 0x40a1f000u, 0xdaca3800u, 0x03853c00u, 0xb4109200u, 0x1a71ef00u, 0x19222180u, 0xd7a923c0u, 0x9e12b820u, 0x2b08e2b0u, 0x42d8a6e8u, 0x678df404u, 0x76481612u, 0xc73c010fu},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0x70000000u, 0x48000000u, 0x6c000000u, 0x4e000000u, 0x3b000000u, 0x94800000u, 0xc1c00000u, 0xbe200000u, 0xb3500000u, 0x98880000u, 0xffdc0000u, 0xcd320000u, 0x4bc10000u, 0x17728000u, 0x7aabc000u, 0xeac8a000u, 0x12b6f000u, 0x56883800u, 0x04dc2c00u, 0x39b20a00u, 0xfa010700u, 0xe1528180u, 0xa5fbd5c0u, 0x3c4096a0u, 0xd66aceb0u, 0x0f3a32a8u, 0x8edd30a4u, 0x90e083aau, 0x33fad423u},
    {0x80000000u, 0x40000000u, 0x60000000u, 0x90000000u, 0x58000000u, 0x44000000u, 0x1a000000u, 0xf1000000u, 0x4e800000u, 0xf5c00000u, 0x32600000u, 0x3d100000u, 0x28f80000u, 0xcaa40000u, 0xcfee0000u, 0x337f0000u, 0xbbad8000u, 0xc14bc000u, 0xa6bba000u, 0x1990d000u, 0xa4783800u, 0xca643400u, 0xc90e0e00u, 0x9aaf3500u, 0xb7b59080u, 0x873fed40u, 0x69cdb520u, 0x2c5bd130u, 0xb643a738u, 0x0734c634u, 0x299628a6u, 0x4c1b18edu},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0xf0000000u, 0xc8000000u, 0xe4000000u, 0x42000000u, 0xbd000000u, 0x6a800000u, 0x05c00000u, 0x2a200000u, 0x89100000u, 0xf0880000u, 0x64dc0000u, 0x2eb60000u, 0x97830000u, 0x4f578000u, 0x3fe7c000u, 0x9b69a000u, 0x55b8f000u, 0x32081800u, 0xb51c0c00u, 0x6e960a00u, 0xb7930500u, 0x5f5fa280u, 0x07fbd640u, 0xb77faa20u, 0xf3ebde30u, 0xcd778828u, 0x62f7ef34u, 0x01e19caau, 0x9864ce73u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0x10000000u, 0x48000000u, 0xdc000000u, 0x92000000u, 0x53000000u, 0x6c800000u, 0x85c00000u, 0x36600000u, 0xe5500000u, 0xc9f80000u, 0xac6c0000u, 0x8a6a0000u, 0x27570000u, 0x32e88000u, 0x0cfbc000u, 0xd5faa000u, 0x9e00d000u, 0x29181800u, 0x13fc1400u, 0x23722a00u, 0x74ab3300u, 0xf19ab680u, 0x6850e3c0u, 0x6c601fa0u, 0x2a5025b0u, 0xd7782eb8u, 0x6aac1c24u, 0x988a2de6u, 0x9bc7254fu},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0xd0000000u, 0x98000000u, 0x6c000000u, 0x2e000000u, 0x71000000u, 0x7c800000u, 0xebc00000u, 0xd2200000u, 0x67500000u, 0xd1d80000u, 0xf1640000u, 0xbc9a0000u, 0x8bd10000u, 0x02678000u, 0xff1ac000u, 0xbda5a000u, 0xdf6ff000u, 0xcdf83800u, 0xf7340400u, 0xe9c23e00u, 0x2d752f00u, 0xdaddad80u, 0x0e9bc740u, 0x3c9a34a0u, 0x4bd116b0u, 0x6267b3a8u, 0x2f1ad724u, 0x25a586feu, 0xb36fce8du},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0x30000000u, 0xb8000000u, 0xac000000u, 0x06000000u, 0xfd000000u, 0xef800000u, 0xf8c00000u, 0x8c200000u, 0xf6300000u, 0xe5480000u, 0x73c40000u, 0x46ca0000u, 0xdd750000u, 0x1fcd8000u, 0xe0814000u, 0x106fa000u, 0x48007000u, 0xb4200800u, 0x9a303c00u, 0x43480600u, 0xbec42700u, 0x114a2f80u, 0x89b51440u, 0x95edba60u, 0xebb14170u, 0x1aa7b8e8u, 0xc30473bcu, 0x7eca125au, 0xb1751d7du},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x50000000u, 0x58000000u, 0x14000000u, 0x5a000000u, 0x75000000u, 0x6c800000u, 0x87c00000u, 0xdc600000u, 0xf6700000u, 0xcb780000u, 0x4b840000u, 0xd2660000u, 0x79070000u, 0x82c78000u, 0xf8e4c000u, 0x9db9a000u, 0x0917d000u, 0xcae00800u, 0x14b00400u, 0x83983e00u, 0x7e341100u, 0xc77e0080u, 0xa5f31840u, 0xad598da0u, 0x38a7fcb0u, 0x7df80c38u, 0xf9440c6cu, 0xc2862dc6u, 0x58b73b7du},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0x70000000u, 0xe8000000u, 0x94000000u, 0x42000000u, 0x7b000000u, 0x49800000u, 0x3cc00000u, 0x90200000u, 0x58500000u, 0x1c080000u, 0xa64c0000u, 0xd13e0000u, 0xa6eb0000u, 0x375c8000u, 0xd7f94000u, 0x81caa000u, 0x78ce7000u, 0x2a003800u, 0x2f002c00u, 0x6b802200u, 0x37c03900u, 0x31a02a80u, 0xf0903bc0u, 0xce2802e0u, 0x851c11f0u, 0x84b63668u, 0x3c671924u, 0x7642a30au, 0x29427f87u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0xf0000000u, 0x28000000u, 0x14000000u, 0x4a000000u, 0xe3000000u, 0x6f800000u, 0x72c00000u, 0x70200000u, 0xe8300000u, 0x34080000u, 0xba3c0000u, 0xcb0a0000u, 0x7b850000u, 0x38d28000u, 0x9318c000u, 0x87abe000u, 0x46d4b000u, 0xca000800u, 0x23000c00u, 0x4f800200u, 0x82c00f00u, 0x58200280u, 0xfc300140u, 0x7e0804a0u, 0x593c0e30u, 0xa48a06f8u, 0x0945072cu, 0x48f28702u, 0x7b28ce83u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0x50000000u, 0x28000000u, 0x9c000000u, 0x7e000000u, 0xff000000u, 0x43800000u, 0x79c00000u, 0xb8200000u, 0x14100000u, 0x52380000u, 0xf9140000u, 0x088a0000u, 0xd8670000u, 0x40ff8000u, 0x108fc000u, 0x7c78e000u, 0x6ad27000u, 0x5d800800u, 0x96c00400u, 0x33a00e00u, 0xa1d00500u, 0xbc180280u, 0x8e0409c0u, 0x673207e0u, 0xa7b30ff0u, 0xb3d58438u, 0xa538c79cu, 0xd69f6b82u, 0x9759b141u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0x70000000u, 0x48000000u, 0x1c000000u, 0xae000000u, 0xf9000000u, 0x6c800000u, 0x95c00000u, 0x7c200000u, 0x3e300000u, 0xe1080000u, 0x489c0000u, 0x6fd20000u, 0x37270000u, 0x059b8000u, 0xe1764000u, 0xcde72000u, 0xb8277000u, 0x94200800u, 0x92300c00u, 0x27080200u, 0xdd9c0700u, 0xe5520480u, 0x47e701c0u, 0xbb3b8ae0u, 0xb3864f90u, 0x3c4f26c8u, 0x5b4b795cu, 0x66da0fc2u, 0xd3bb0fe3u},
    {0x80000000u, 0x40000000u, 0x60000000u, 0xd0000000u, 0x48000000u, 0xbc000000u, 0x0e000000u, 0xe1000000u, 0xb5800000u, 0x3dc00000u, 0x8c200000u, 0xd6100000u, 0x75180000u, 0xd7b40000u, 0x9ad20000u, 0x648f0000u, 0x50538000u, 0x25c04000u, 0x38296000u, 0x04157000u, 0x4a200800u, 0xcb100400u, 0xae980600u, 0xdb740d00u, 0xeb720480u, 0x335f0bc0u, 0xa76b80e0u, 0xc5644e10u, 0x62636b58u, 0x8aee73dcu, 0x0c8180c2u, 0x5c4f4961u},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0xd0000000u, 0x98000000u, 0x34000000u, 0x12000000u, 0x43000000u, 0x04800000u, 0xb8400000u, 0x46200000u, 0x41300000u, 0x3fb80000u, 0x58f40000u, 0x74460000u, 0x701d0000u, 0x680c8000u, 0x9c1cc000u, 0x6e132000u, 0xfd051000u, 0x61980800u, 0xedc40c00u, 0xb9fe0e00u, 0xbbe90d00u, 0x80ca8980u, 0x6041c340u, 0x523fa120u, 0x6329d430u, 0x34b32848u, 0xf0751784u, 0xea000262u, 0x67000513u},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0x50000000u, 0x98000000u, 0xec000000u, 0x0e000000u, 0x29000000u, 0x9f800000u, 0xa9400000u, 0x52200000u, 0x8f300000u, 0x32a80000u, 0x1cd40000u, 0xa8460000u, 0x89ab0000u, 0xac5b8000u, 0x63964000u, 0x5f65e000u, 0x673f5000u, 0xd6880800u, 0xc6e40c00u, 0x336e0a00u, 0xa93f0500u, 0x5fbd8980u, 0x094d4ec0u, 0x023660e0u, 0x170d1290u, 0xdea3e1f8u, 0x12d45694u, 0x81738722u, 0x160241f3u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x30000000u, 0xf8000000u, 0xfc000000u, 0x1e000000u, 0x2b000000u, 0x67800000u, 0xc5400000u, 0xab200000u, 0x27900000u, 0x65680000u, 0x9b2c0000u, 0xdfae0000u, 0x99570000u, 0x852b8000u, 0xf4a4c000u, 0xfecee000u, 0x405ad000u, 0x5fae0800u, 0xd9570400u, 0x252b8a00u, 0xc4a4c300u, 0x06ceef80u, 0xbc5adfc0u, 0x41ae09e0u, 0xf25706b0u, 0x42ab8c78u, 0x01e4cf54u, 0xadeee532u, 0x9bcaddb9u},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0x90000000u, 0x68000000u, 0x9c000000u, 0x06000000u, 0x2f000000u, 0xf8800000u, 0x2a400000u, 0x7f200000u, 0x30900000u, 0xc6780000u, 0x81040000u, 0xeb8a0000u, 0xa4df0000u, 0x82458000u, 0x4321c000u, 0x46b12000u, 0x11571000u, 0x8d8a0800u, 0x5bdf0400u, 0xf2c58e00u, 0x6561c900u, 0x57912680u, 0x92c719c0u, 0xb5720860u, 0xdf9b06f0u, 0x9eef8188u, 0xdb6ecba4u, 0x6c8ca172u, 0x6072dac9u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0x70000000u, 0xa8000000u, 0x44000000u, 0xc2000000u, 0x13000000u, 0xcf800000u, 0xe2400000u, 0x71200000u, 0x6cb00000u, 0xa5c80000u, 0xa77c0000u, 0x77ba0000u, 0x9e690000u, 0x0f048000u, 0x2182c000u, 0x5740e000u, 0x1fa51000u, 0xfa720800u, 0xbd150c00u, 0x9abe8200u, 0xdcebc700u, 0x3fc46a80u, 0x9867d440u, 0x1e12e420u, 0xdd001d30u, 0x0a8486f8u, 0x24c2c524u, 0xa3e0ef92u, 0xb655158bu},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0x10000000u, 0x18000000u, 0x7c000000u, 0x8e000000u, 0x6f000000u, 0x52800000u, 0x1fc00000u, 0x59200000u, 0x71b00000u, 0x2b780000u, 0x5de40000u, 0x90160000u, 0xd8170000u, 0x9c1f8000u, 0x9e19c000u, 0x770da000u, 0x2ebb7000u, 0x91ee0800u, 0x36330c00u, 0x23298e00u, 0x34bec100u, 0x04ea2180u, 0xe186b7c0u, 0xf355a0e0u, 0xc1ef7af0u, 0x0e000328u, 0xaf000cfcu, 0xb2800a12u, 0x0fc001dbu},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0xb0000000u, 0x08000000u, 0xf4000000u, 0xa6000000u, 0x77000000u, 0x65800000u, 0xd3c00000u, 0x45200000u, 0xe4900000u, 0xd9680000u, 0xbf4c0000u, 0x28720000u, 0x5de50000u, 0x361d8000u, 0x8f0bc000u, 0x39a26000u, 0x31ce7000u, 0x9c3a0800u, 0x02390400u, 0xc9078a00u, 0x5ea2cb00u, 0xec4de080u, 0xb3e0bf40u, 0x1525e260u, 0xfcacb370u, 0x9557e458u, 0xe549b23cu, 0x0d4a66d2u, 0xe9427e09u},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0xd0000000u, 0x48000000u, 0xf4000000u, 0x26000000u, 0x61000000u, 0x17800000u, 0x08c00000u, 0xbb200000u, 0x04b00000u, 0xe8580000u, 0x5d540000u, 0x1cc20000u, 0x8d350000u, 0x4d958000u, 0xdbe64000u, 0x3bbee000u, 0x32d4b000u, 0xb83a0800u, 0xcc110c00u, 0x2a2f8600u, 0x2b374d00u, 0xecb16480u, 0xac53ff40u, 0xe3536a60u, 0xc1d6fa10u, 0x489eef78u, 0x0264b18cu, 0x16620132u, 0x20450e0bu},
    {0x80000000u, 0x40000000u, 0xe0000000u, 0x70000000u, 0x78000000u, 0x74000000u, 0x7e000000u, 0x5f000000u, 0xd0800000u, 0x75400000u, 0x7d200000u, 0x2d900000u, 0x18f80000u, 0x85fc0000u, 0xd86e0000u, 0xb8950000u, 0x496b8000u, 0xef0dc000u, 0x08bb2000u, 0x9179d000u, 0x0b360800u, 0x7eb90400u, 0xc25d8e00u, 0xd1b4c700u, 0x2ae6a780u, 0x30cd1740u, 0x59d0afe0u, 0x3a7411f0u, 0xe58d2b08u, 0xb4c0d454u, 0x1feb8652u, 0xf14dc699u},
    {0x80000000u, 0xc0000000u, 0x20000000u, 0x90000000u, 0xc8000000u, 0x24000000u, 0x8e000000u, 0x39000000u, 0x6a800000u, 0x60400000u, 0x5aa00000u, 0xf8700000u, 0x96a80000u, 0xc2540000u, 0xe99a0000u, 0xb5dd0000u, 0x6d798000u, 0xb6334000u, 0xa5332000u, 0xb8b35000u, 0xab798800u, 0x6b334c00u, 0x61b32200u, 0x71f35900u, 0x53598480u, 0xd7034e40u, 0x23bb2ae0u, 0x72d75a90u, 0x46eb8228u, 0xc0ca4844u, 0xfdf8af4au, 0x89491517u},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0xd0000000u, 0xf8000000u, 0xbc000000u, 0xca000000u, 0x39000000u, 0x13800000u, 0x55400000u, 0xbba00000u, 0xd1700000u, 0x6d880000u, 0xf2440000u, 0xbf360000u, 0x08ab0000u, 0x9be48000u, 0x5b754000u, 0x34986000u, 0x91ec1000u, 0xc2648800u, 0xf7354c00u, 0x3cb86a00u, 0xc5dc1d00u, 0xec4c8780u, 0x680147c0u, 0x240666a0u, 0x06331e90u, 0xdb1e06b8u, 0x6e9f0294u, 0x30da8d1au, 0x1dda4387u},
    {0x80000000u, 0x40000000u, 0x60000000u, 0x30000000u, 0xf8000000u, 0xe4000000u, 0xfa000000u, 0xad000000u, 0xb6800000u, 0x89c00000u, 0x92a00000u, 0x53d00000u, 0x6fb80000u, 0x2d5c0000u, 0xfa460000u, 0xa1c50000u, 0xfea88000u, 0xd5d64000u, 0xec992000u, 0x34d23000u, 0x8c088800u, 0xf6064400u, 0x1b212600u, 0xcd8e3300u, 0x744e8780u, 0x1ec34a40u, 0xa909a9a0u, 0x3c9879d0u, 0xbcf7ace8u, 0xf00172dcu, 0xd819288au, 0xb41238edu},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0x10000000u, 0x68000000u, 0xe4000000u, 0x86000000u, 0x9d000000u, 0xe1800000u, 0xb0c00000u, 0xeda00000u, 0x12f00000u, 0x16980000u, 0x7e740000u, 0x2fc20000u, 0xc72d0000u, 0x56b38000u, 0x5e624000u, 0xdfe7e000u, 0xbf387000u, 0xda938800u, 0x3c524c00u, 0xc4dfee00u, 0xc3bc7100u, 0x8bc98e80u, 0x610b4240u, 0x3bae6660u, 0xc7f338d0u, 0xe31de098u, 0x3091794cu, 0xd37a00bau, 0x566905ffu},
    {0x80000000u, 0x40000000u, 0x20000000u, 0x70000000u, 0xa8000000u, 0x34000000u, 0xd2000000u, 0x59000000u, 0xd6800000u, 0xf1400000u, 0x9aa00000u, 0x8f500000u, 0xada80000u, 0x96cc0000u, 0xa9420000u, 0x46a10000u, 0x49468000u, 0x56af4000u, 0xb1672000u, 0xbaa51000u, 0xff668800u, 0x05bf4400u, 0xa2ef2200u, 0x7b791700u, 0x1fac8280u, 0x9fc24740u, 0xa7e3af20u, 0x2beb5290u, 0x35e72fe8u, 0x52e51854u, 0x93468e8au, 0x0baf4e65u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x90000000u, 0x88000000u, 0xcc000000u, 0x5a000000u, 0x77000000u, 0x4e800000u, 0x23400000u, 0xd4a00000u, 0xb4500000u, 0xaa080000u, 0x8f340000u, 0x3a8a0000u, 0xad570000u, 0xbd948000u, 0x1bfec000u, 0xeacd2000u, 0x41411000u, 0x379c8800u, 0x44cac400u, 0xf8472a00u, 0xb0161900u, 0x58080080u, 0xe43408c0u, 0x060a0fa0u, 0xa5170e70u, 0xf5b48c68u, 0x37eecef4u, 0x80e528eau, 0x2e651c35u},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0x70000000u, 0x68000000u, 0xb4000000u, 0xb6000000u, 0x09000000u, 0x40800000u, 0xb9400000u, 0x3ea00000u, 0x54700000u, 0x30180000u, 0x482c0000u, 0x24220000u, 0xae310000u, 0xd5378000u, 0x42af4000u, 0x067da000u, 0x770c1000u, 0xadaf8800u, 0xb7c34c00u, 0x22ffae00u, 0x404d1700u, 0xd6000e80u, 0xb9000740u, 0xc8800560u, 0x7d400790u, 0xe0a00288u, 0xe97000d4u, 0xc698088au, 0xf86c05d7u},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0x10000000u, 0xb8000000u, 0xe4000000u, 0x86000000u, 0x8d000000u, 0x4b800000u, 0x8ec00000u, 0x79a00000u, 0x1df00000u, 0xab180000u, 0xf6b40000u, 0x8d560000u, 0xbb5d0000u, 0xbe5f8000u, 0x59f24000u, 0x1d1f6000u, 0x33a2f000u, 0x8ae78800u, 0xefb64c00u, 0x28d16e00u, 0x048bf100u, 0xfe4e0380u, 0x79e90240u, 0xed098660u, 0x9baf49d0u, 0xd6c0ef38u, 0x8d90b6acu, 0x23d8e7fau, 0xc224b50fu},
    {0x80000000u, 0x40000000u, 0x60000000u, 0xb0000000u, 0x88000000u, 0xbc000000u, 0xba000000u, 0x6b000000u, 0xbb800000u, 0x27400000u, 0x30a00000u, 0x6cd00000u, 0xfff80000u, 0x505c0000u, 0xa10a0000u, 0x788b0000u, 0xf0f88000u, 0x95dbc000u, 0x037d6000u, 0x2eba9000u, 0x59f28800u, 0x1150c400u, 0x2985e600u, 0x60615b00u, 0x690fe080u, 0xa4aa5fc0u, 0xfad765a0u, 0x76e199b0u, 0x04f20d38u, 0xb3d706b4u, 0x0272862au, 0xc610c0bdu},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0x50000000u, 0x58000000u, 0x54000000u, 0x56000000u, 0x33000000u, 0x54800000u, 0xe4c00000u, 0x17a00000u, 0x18700000u, 0xcf780000u, 0x05c40000u, 0xbe1e0000u, 0xaf290000u, 0x6e8f8000u, 0x85dbc000u, 0x7e23a000u, 0xcf057000u, 0x3e918800u, 0xddf2cc00u, 0x2a2c2600u, 0x991eb500u, 0x0d922d80u, 0x8947b940u, 0xcee5ab60u, 0x8e987a30u, 0x15f80ec8u, 0x4604020cu, 0xcb3e079au, 0x309902f7u},
    {0x80000000u, 0x40000000u, 0xa0000000u, 0x30000000u, 0x78000000u, 0xdc000000u, 0xca000000u, 0x43000000u, 0xe3800000u, 0x9c400000u, 0xb8a00000u, 0x73d00000u, 0x06c80000u, 0x1c7c0000u, 0xf8860000u, 0xd3c30000u, 0x36e88000u, 0x6445c000u, 0x24bb6000u, 0x19c65000u, 0x75ee8800u, 0x87c6c400u, 0xb8f3ea00u, 0xa1539300u, 0x061def80u, 0x813c99c0u, 0xa4bb6ea0u, 0x59c65330u, 0xd5ee8bb8u, 0xb7c6c304u, 0xc0f3eaaau, 0x7d539dcdu},
    {0x80000000u, 0xc0000000u, 0xa0000000u, 0x90000000u, 0x08000000u, 0x5c000000u, 0x3a000000u, 0x2f000000u, 0xac800000u, 0x94c00000u, 0x5fa00000u, 0xc2700000u, 0x44480000u, 0xa1740000u, 0x1afa0000u, 0xe68b0000u, 0x43f08000u, 0x9732c000u, 0xa8a4a000u, 0x5add7000u, 0x86aa8800u, 0x73c9cc00u, 0x0f1c2a00u, 0xfc9bb900u, 0x3cf42880u, 0x939fb9c0u, 0xf04621a0u, 0x3760b7f0u, 0x37cca848u, 0xa119798cu, 0x15b884dau, 0x1546ce17u},
    {0x80000000u, 0xc0000000u, 0xe0000000u, 0x70000000u, 0x28000000u, 0xc4000000u, 0x3a000000u, 0x9b000000u, 0xa1800000u, 0x93400000u, 0xa0a00000u, 0xf9f00000u, 0x2a580000u, 0x560c0000u, 0xa5020000u, 0xe0950000u, 0xd9d88000u, 0xba7dc000u, 0x0e07e000u, 0x49049000u, 0x1e828800u, 0x78e4cc00u, 0x80dd6e00u, 0x3cec5700u, 0x7addea80u, 0x47dd9040u, 0xab7805a0u, 0xfcbc02b0u, 0xcffa0698u, 0x3f690274u, 0x7e828b2au, 0xc8e4ca6fu},
    {0x80000000u, 0xc0000000u, 0x60000000u, 0x70000000u, 0x28000000u, 0xa4000000u, 0xfe000000u, 0x3d000000u, 0x82800000u, 0xb3400000u, 0x05a00000u, 0x42f00000u, 0x41780000u, 0xa28c0000u, 0x63620000u, 0x3d8d0000u, 0xbed98000u, 0x33544000u, 0xc5ba2000u, 0x22fe1000u, 0x31638800u, 0x8aa54c00u, 0xc779a600u, 0xc3ab5700u, 0x83e22a80u, 0xb1c21640u, 0x76d981e0u, 0x275448d0u, 0x73ba2ca8u, 0xcbfe1674u, 0x65e3853au, 0xa0e541bfu},
};

}  // namespace saacg::detail
