# Generated by genkernels. Do not edit by hand.

from bbdgemm.vectorize import vectorize_batch_loop


@vectorize_batch_loop("bbdgemm_ColMajor_20_9_10_csi")
def bbdgemm_ColMajor_20_9_10_csi(E, alpha, A, lda, B, ldb, beta, C, ldc):
    sizeB = 9 * ldb
    vA_0_0 = A[(0*lda+0)]
    vA_0_1 = A[(1*lda+0)]
    vA_0_2 = A[(2*lda+0)]
    vA_0_3 = A[(3*lda+0)]
    vA_0_4 = A[(4*lda+0)]
    vA_0_5 = A[(5*lda+0)]
    vA_0_6 = A[(6*lda+0)]
    vA_0_7 = A[(7*lda+0)]
    vA_0_8 = A[(8*lda+0)]
    vA_0_9 = A[(9*lda+0)]
    vA_1_0 = A[(0*lda+1)]
    vA_1_1 = A[(1*lda+1)]
    vA_1_2 = A[(2*lda+1)]
    vA_1_3 = A[(3*lda+1)]
    vA_1_4 = A[(4*lda+1)]
    vA_1_5 = A[(5*lda+1)]
    vA_1_6 = A[(6*lda+1)]
    vA_1_7 = A[(7*lda+1)]
    vA_1_8 = A[(8*lda+1)]
    vA_1_9 = A[(9*lda+1)]
    vA_2_0 = A[(0*lda+2)]
    vA_2_1 = A[(1*lda+2)]
    vA_2_2 = A[(2*lda+2)]
    vA_2_3 = A[(3*lda+2)]
    vA_2_4 = A[(4*lda+2)]
    vA_2_5 = A[(5*lda+2)]
    vA_2_6 = A[(6*lda+2)]
    vA_2_7 = A[(7*lda+2)]
    vA_2_8 = A[(8*lda+2)]
    vA_2_9 = A[(9*lda+2)]
    vA_3_0 = A[(0*lda+3)]
    vA_3_1 = A[(1*lda+3)]
    vA_3_2 = A[(2*lda+3)]
    vA_3_3 = A[(3*lda+3)]
    vA_3_4 = A[(4*lda+3)]
    vA_3_5 = A[(5*lda+3)]
    vA_3_6 = A[(6*lda+3)]
    vA_3_7 = A[(7*lda+3)]
    vA_3_8 = A[(8*lda+3)]
    vA_3_9 = A[(9*lda+3)]
    vA_4_0 = A[(0*lda+4)]
    vA_4_1 = A[(1*lda+4)]
    vA_4_2 = A[(2*lda+4)]
    vA_4_3 = A[(3*lda+4)]
    vA_4_4 = A[(4*lda+4)]
    vA_4_5 = A[(5*lda+4)]
    vA_4_6 = A[(6*lda+4)]
    vA_4_7 = A[(7*lda+4)]
    vA_4_8 = A[(8*lda+4)]
    vA_4_9 = A[(9*lda+4)]
    vA_5_0 = A[(0*lda+5)]
    vA_5_1 = A[(1*lda+5)]
    vA_5_2 = A[(2*lda+5)]
    vA_5_3 = A[(3*lda+5)]
    vA_5_4 = A[(4*lda+5)]
    vA_5_5 = A[(5*lda+5)]
    vA_5_6 = A[(6*lda+5)]
    vA_5_7 = A[(7*lda+5)]
    vA_5_8 = A[(8*lda+5)]
    vA_5_9 = A[(9*lda+5)]
    vA_6_0 = A[(0*lda+6)]
    vA_6_1 = A[(1*lda+6)]
    vA_6_2 = A[(2*lda+6)]
    vA_6_3 = A[(3*lda+6)]
    vA_6_4 = A[(4*lda+6)]
    vA_6_5 = A[(5*lda+6)]
    vA_6_6 = A[(6*lda+6)]
    vA_6_7 = A[(7*lda+6)]
    vA_6_8 = A[(8*lda+6)]
    vA_6_9 = A[(9*lda+6)]
    vA_7_0 = A[(0*lda+7)]
    vA_7_1 = A[(1*lda+7)]
    vA_7_2 = A[(2*lda+7)]
    vA_7_3 = A[(3*lda+7)]
    vA_7_4 = A[(4*lda+7)]
    vA_7_5 = A[(5*lda+7)]
    vA_7_6 = A[(6*lda+7)]
    vA_7_7 = A[(7*lda+7)]
    vA_7_8 = A[(8*lda+7)]
    vA_7_9 = A[(9*lda+7)]
    vA_8_0 = A[(0*lda+8)]
    vA_8_1 = A[(1*lda+8)]
    vA_8_2 = A[(2*lda+8)]
    vA_8_3 = A[(3*lda+8)]
    vA_8_4 = A[(4*lda+8)]
    vA_8_5 = A[(5*lda+8)]
    vA_8_6 = A[(6*lda+8)]
    vA_8_7 = A[(7*lda+8)]
    vA_8_8 = A[(8*lda+8)]
    vA_8_9 = A[(9*lda+8)]
    vA_9_0 = A[(0*lda+9)]
    vA_9_1 = A[(1*lda+9)]
    vA_9_2 = A[(2*lda+9)]
    vA_9_3 = A[(3*lda+9)]
    vA_9_4 = A[(4*lda+9)]
    vA_9_5 = A[(5*lda+9)]
    vA_9_6 = A[(6*lda+9)]
    vA_9_7 = A[(7*lda+9)]
    vA_9_8 = A[(8*lda+9)]
    vA_9_9 = A[(9*lda+9)]
    vA_10_0 = A[(0*lda+10)]
    vA_10_1 = A[(1*lda+10)]
    vA_10_2 = A[(2*lda+10)]
    vA_10_3 = A[(3*lda+10)]
    vA_10_4 = A[(4*lda+10)]
    vA_10_5 = A[(5*lda+10)]
    vA_10_6 = A[(6*lda+10)]
    vA_10_7 = A[(7*lda+10)]
    vA_10_8 = A[(8*lda+10)]
    vA_10_9 = A[(9*lda+10)]
    vA_11_0 = A[(0*lda+11)]
    vA_11_1 = A[(1*lda+11)]
    vA_11_2 = A[(2*lda+11)]
    vA_11_3 = A[(3*lda+11)]
    vA_11_4 = A[(4*lda+11)]
    vA_11_5 = A[(5*lda+11)]
    vA_11_6 = A[(6*lda+11)]
    vA_11_7 = A[(7*lda+11)]
    vA_11_8 = A[(8*lda+11)]
    vA_11_9 = A[(9*lda+11)]
    vA_12_0 = A[(0*lda+12)]
    vA_12_1 = A[(1*lda+12)]
    vA_12_2 = A[(2*lda+12)]
    vA_12_3 = A[(3*lda+12)]
    vA_12_4 = A[(4*lda+12)]
    vA_12_5 = A[(5*lda+12)]
    vA_12_6 = A[(6*lda+12)]
    vA_12_7 = A[(7*lda+12)]
    vA_12_8 = A[(8*lda+12)]
    vA_12_9 = A[(9*lda+12)]
    vA_13_0 = A[(0*lda+13)]
    vA_13_1 = A[(1*lda+13)]
    vA_13_2 = A[(2*lda+13)]
    vA_13_3 = A[(3*lda+13)]
    vA_13_4 = A[(4*lda+13)]
    vA_13_5 = A[(5*lda+13)]
    vA_13_6 = A[(6*lda+13)]
    vA_13_7 = A[(7*lda+13)]
    vA_13_8 = A[(8*lda+13)]
    vA_13_9 = A[(9*lda+13)]
    vA_14_0 = A[(0*lda+14)]
    vA_14_1 = A[(1*lda+14)]
    vA_14_2 = A[(2*lda+14)]
    vA_14_3 = A[(3*lda+14)]
    vA_14_4 = A[(4*lda+14)]
    vA_14_5 = A[(5*lda+14)]
    vA_14_6 = A[(6*lda+14)]
    vA_14_7 = A[(7*lda+14)]
    vA_14_8 = A[(8*lda+14)]
    vA_14_9 = A[(9*lda+14)]
    vA_15_0 = A[(0*lda+15)]
    vA_15_1 = A[(1*lda+15)]
    vA_15_2 = A[(2*lda+15)]
    vA_15_3 = A[(3*lda+15)]
    vA_15_4 = A[(4*lda+15)]
    vA_15_5 = A[(5*lda+15)]
    vA_15_6 = A[(6*lda+15)]
    vA_15_7 = A[(7*lda+15)]
    vA_15_8 = A[(8*lda+15)]
    vA_15_9 = A[(9*lda+15)]
    vA_16_0 = A[(0*lda+16)]
    vA_16_1 = A[(1*lda+16)]
    vA_16_2 = A[(2*lda+16)]
    vA_16_3 = A[(3*lda+16)]
    vA_16_4 = A[(4*lda+16)]
    vA_16_5 = A[(5*lda+16)]
    vA_16_6 = A[(6*lda+16)]
    vA_16_7 = A[(7*lda+16)]
    vA_16_8 = A[(8*lda+16)]
    vA_16_9 = A[(9*lda+16)]
    vA_17_0 = A[(0*lda+17)]
    vA_17_1 = A[(1*lda+17)]
    vA_17_2 = A[(2*lda+17)]
    vA_17_3 = A[(3*lda+17)]
    vA_17_4 = A[(4*lda+17)]
    vA_17_5 = A[(5*lda+17)]
    vA_17_6 = A[(6*lda+17)]
    vA_17_7 = A[(7*lda+17)]
    vA_17_8 = A[(8*lda+17)]
    vA_17_9 = A[(9*lda+17)]
    vA_18_0 = A[(0*lda+18)]
    vA_18_1 = A[(1*lda+18)]
    vA_18_2 = A[(2*lda+18)]
    vA_18_3 = A[(3*lda+18)]
    vA_18_4 = A[(4*lda+18)]
    vA_18_5 = A[(5*lda+18)]
    vA_18_6 = A[(6*lda+18)]
    vA_18_7 = A[(7*lda+18)]
    vA_18_8 = A[(8*lda+18)]
    vA_18_9 = A[(9*lda+18)]
    vA_19_0 = A[(0*lda+19)]
    vA_19_1 = A[(1*lda+19)]
    vA_19_2 = A[(2*lda+19)]
    vA_19_3 = A[(3*lda+19)]
    vA_19_4 = A[(4*lda+19)]
    vA_19_5 = A[(5*lda+19)]
    vA_19_6 = A[(6*lda+19)]
    vA_19_7 = A[(7*lda+19)]
    vA_19_8 = A[(8*lda+19)]
    vA_19_9 = A[(9*lda+19)]
    for e in range(E):
        vB_0_0 = B[e*sizeB+(0*ldb+0)]
        vB_0_1 = B[e*sizeB+(1*ldb+0)]
        vB_0_2 = B[e*sizeB+(2*ldb+0)]
        vB_0_3 = B[e*sizeB+(3*ldb+0)]
        vB_0_4 = B[e*sizeB+(4*ldb+0)]
        vB_0_5 = B[e*sizeB+(5*ldb+0)]
        vB_0_6 = B[e*sizeB+(6*ldb+0)]
        vB_0_7 = B[e*sizeB+(7*ldb+0)]
        vB_0_8 = B[e*sizeB+(8*ldb+0)]
        vB_1_0 = B[e*sizeB+(0*ldb+1)]
        vB_1_1 = B[e*sizeB+(1*ldb+1)]
        vB_1_2 = B[e*sizeB+(2*ldb+1)]
        vB_1_3 = B[e*sizeB+(3*ldb+1)]
        vB_1_4 = B[e*sizeB+(4*ldb+1)]
        vB_1_5 = B[e*sizeB+(5*ldb+1)]
        vB_1_6 = B[e*sizeB+(6*ldb+1)]
        vB_1_7 = B[e*sizeB+(7*ldb+1)]
        vB_1_8 = B[e*sizeB+(8*ldb+1)]
        vB_2_0 = B[e*sizeB+(0*ldb+2)]
        vB_2_1 = B[e*sizeB+(1*ldb+2)]
        vB_2_2 = B[e*sizeB+(2*ldb+2)]
        vB_2_3 = B[e*sizeB+(3*ldb+2)]
        vB_2_4 = B[e*sizeB+(4*ldb+2)]
        vB_2_5 = B[e*sizeB+(5*ldb+2)]
        vB_2_6 = B[e*sizeB+(6*ldb+2)]
        vB_2_7 = B[e*sizeB+(7*ldb+2)]
        vB_2_8 = B[e*sizeB+(8*ldb+2)]
        vB_3_0 = B[e*sizeB+(0*ldb+3)]
        vB_3_1 = B[e*sizeB+(1*ldb+3)]
        vB_3_2 = B[e*sizeB+(2*ldb+3)]
        vB_3_3 = B[e*sizeB+(3*ldb+3)]
        vB_3_4 = B[e*sizeB+(4*ldb+3)]
        vB_3_5 = B[e*sizeB+(5*ldb+3)]
        vB_3_6 = B[e*sizeB+(6*ldb+3)]
        vB_3_7 = B[e*sizeB+(7*ldb+3)]
        vB_3_8 = B[e*sizeB+(8*ldb+3)]
        vB_4_0 = B[e*sizeB+(0*ldb+4)]
        vB_4_1 = B[e*sizeB+(1*ldb+4)]
        vB_4_2 = B[e*sizeB+(2*ldb+4)]
        vB_4_3 = B[e*sizeB+(3*ldb+4)]
        vB_4_4 = B[e*sizeB+(4*ldb+4)]
        vB_4_5 = B[e*sizeB+(5*ldb+4)]
        vB_4_6 = B[e*sizeB+(6*ldb+4)]
        vB_4_7 = B[e*sizeB+(7*ldb+4)]
        vB_4_8 = B[e*sizeB+(8*ldb+4)]
        vB_5_0 = B[e*sizeB+(0*ldb+5)]
        vB_5_1 = B[e*sizeB+(1*ldb+5)]
        vB_5_2 = B[e*sizeB+(2*ldb+5)]
        vB_5_3 = B[e*sizeB+(3*ldb+5)]
        vB_5_4 = B[e*sizeB+(4*ldb+5)]
        vB_5_5 = B[e*sizeB+(5*ldb+5)]
        vB_5_6 = B[e*sizeB+(6*ldb+5)]
        vB_5_7 = B[e*sizeB+(7*ldb+5)]
        vB_5_8 = B[e*sizeB+(8*ldb+5)]
        vB_6_0 = B[e*sizeB+(0*ldb+6)]
        vB_6_1 = B[e*sizeB+(1*ldb+6)]
        vB_6_2 = B[e*sizeB+(2*ldb+6)]
        vB_6_3 = B[e*sizeB+(3*ldb+6)]
        vB_6_4 = B[e*sizeB+(4*ldb+6)]
        vB_6_5 = B[e*sizeB+(5*ldb+6)]
        vB_6_6 = B[e*sizeB+(6*ldb+6)]
        vB_6_7 = B[e*sizeB+(7*ldb+6)]
        vB_6_8 = B[e*sizeB+(8*ldb+6)]
        vB_7_0 = B[e*sizeB+(0*ldb+7)]
        vB_7_1 = B[e*sizeB+(1*ldb+7)]
        vB_7_2 = B[e*sizeB+(2*ldb+7)]
        vB_7_3 = B[e*sizeB+(3*ldb+7)]
        vB_7_4 = B[e*sizeB+(4*ldb+7)]
        vB_7_5 = B[e*sizeB+(5*ldb+7)]
        vB_7_6 = B[e*sizeB+(6*ldb+7)]
        vB_7_7 = B[e*sizeB+(7*ldb+7)]
        vB_7_8 = B[e*sizeB+(8*ldb+7)]
        vB_8_0 = B[e*sizeB+(0*ldb+8)]
        vB_8_1 = B[e*sizeB+(1*ldb+8)]
        vB_8_2 = B[e*sizeB+(2*ldb+8)]
        vB_8_3 = B[e*sizeB+(3*ldb+8)]
        vB_8_4 = B[e*sizeB+(4*ldb+8)]
        vB_8_5 = B[e*sizeB+(5*ldb+8)]
        vB_8_6 = B[e*sizeB+(6*ldb+8)]
        vB_8_7 = B[e*sizeB+(7*ldb+8)]
        vB_8_8 = B[e*sizeB+(8*ldb+8)]
        vB_9_0 = B[e*sizeB+(0*ldb+9)]
        vB_9_1 = B[e*sizeB+(1*ldb+9)]
        vB_9_2 = B[e*sizeB+(2*ldb+9)]
        vB_9_3 = B[e*sizeB+(3*ldb+9)]
        vB_9_4 = B[e*sizeB+(4*ldb+9)]
        vB_9_5 = B[e*sizeB+(5*ldb+9)]
        vB_9_6 = B[e*sizeB+(6*ldb+9)]
        vB_9_7 = B[e*sizeB+(7*ldb+9)]
        vB_9_8 = B[e*sizeB+(8*ldb+9)]
        rC_0_0 = 0.0
        rC_0_0 = vA_0_0 * vB_0_0 + rC_0_0
        rC_0_0 = vA_0_1 * vB_1_0 + rC_0_0
        rC_0_0 = vA_0_2 * vB_2_0 + rC_0_0
        rC_0_0 = vA_0_3 * vB_3_0 + rC_0_0
        rC_0_0 = vA_0_4 * vB_4_0 + rC_0_0
        rC_0_0 = vA_0_5 * vB_5_0 + rC_0_0
        rC_0_0 = vA_0_6 * vB_6_0 + rC_0_0
        rC_0_0 = vA_0_7 * vB_7_0 + rC_0_0
        rC_0_0 = vA_0_8 * vB_8_0 + rC_0_0
        rC_0_0 = vA_0_9 * vB_9_0 + rC_0_0
        rC_0_0 = rC_0_0 * alpha
        rC_1_0 = 0.0
        rC_1_0 = vA_1_0 * vB_0_0 + rC_1_0
        rC_1_0 = vA_1_1 * vB_1_0 + rC_1_0
        rC_1_0 = vA_1_2 * vB_2_0 + rC_1_0
        rC_1_0 = vA_1_3 * vB_3_0 + rC_1_0
        rC_1_0 = vA_1_4 * vB_4_0 + rC_1_0
        rC_1_0 = vA_1_5 * vB_5_0 + rC_1_0
        rC_1_0 = vA_1_6 * vB_6_0 + rC_1_0
        rC_1_0 = vA_1_7 * vB_7_0 + rC_1_0
        rC_1_0 = vA_1_8 * vB_8_0 + rC_1_0
        rC_1_0 = vA_1_9 * vB_9_0 + rC_1_0
        rC_1_0 = rC_1_0 * alpha
        rC_2_0 = 0.0
        rC_2_0 = vA_2_0 * vB_0_0 + rC_2_0
        rC_2_0 = vA_2_1 * vB_1_0 + rC_2_0
        rC_2_0 = vA_2_2 * vB_2_0 + rC_2_0
        rC_2_0 = vA_2_3 * vB_3_0 + rC_2_0
        rC_2_0 = vA_2_4 * vB_4_0 + rC_2_0
        rC_2_0 = vA_2_5 * vB_5_0 + rC_2_0
        rC_2_0 = vA_2_6 * vB_6_0 + rC_2_0
        rC_2_0 = vA_2_7 * vB_7_0 + rC_2_0
        rC_2_0 = vA_2_8 * vB_8_0 + rC_2_0
        rC_2_0 = vA_2_9 * vB_9_0 + rC_2_0
        rC_2_0 = rC_2_0 * alpha
        rC_3_0 = 0.0
        rC_3_0 = vA_3_0 * vB_0_0 + rC_3_0
        rC_3_0 = vA_3_1 * vB_1_0 + rC_3_0
        rC_3_0 = vA_3_2 * vB_2_0 + rC_3_0
        rC_3_0 = vA_3_3 * vB_3_0 + rC_3_0
        rC_3_0 = vA_3_4 * vB_4_0 + rC_3_0
        rC_3_0 = vA_3_5 * vB_5_0 + rC_3_0
        rC_3_0 = vA_3_6 * vB_6_0 + rC_3_0
        rC_3_0 = vA_3_7 * vB_7_0 + rC_3_0
        rC_3_0 = vA_3_8 * vB_8_0 + rC_3_0
        rC_3_0 = vA_3_9 * vB_9_0 + rC_3_0
        rC_3_0 = rC_3_0 * alpha
        rC_4_0 = 0.0
        rC_4_0 = vA_4_0 * vB_0_0 + rC_4_0
        rC_4_0 = vA_4_1 * vB_1_0 + rC_4_0
        rC_4_0 = vA_4_2 * vB_2_0 + rC_4_0
        rC_4_0 = vA_4_3 * vB_3_0 + rC_4_0
        rC_4_0 = vA_4_4 * vB_4_0 + rC_4_0
        rC_4_0 = vA_4_5 * vB_5_0 + rC_4_0
        rC_4_0 = vA_4_6 * vB_6_0 + rC_4_0
        rC_4_0 = vA_4_7 * vB_7_0 + rC_4_0
        rC_4_0 = vA_4_8 * vB_8_0 + rC_4_0
        rC_4_0 = vA_4_9 * vB_9_0 + rC_4_0
        rC_4_0 = rC_4_0 * alpha
        rC_5_0 = 0.0
        rC_5_0 = vA_5_0 * vB_0_0 + rC_5_0
        rC_5_0 = vA_5_1 * vB_1_0 + rC_5_0
        rC_5_0 = vA_5_2 * vB_2_0 + rC_5_0
        rC_5_0 = vA_5_3 * vB_3_0 + rC_5_0
        rC_5_0 = vA_5_4 * vB_4_0 + rC_5_0
        rC_5_0 = vA_5_5 * vB_5_0 + rC_5_0
        rC_5_0 = vA_5_6 * vB_6_0 + rC_5_0
        rC_5_0 = vA_5_7 * vB_7_0 + rC_5_0
        rC_5_0 = vA_5_8 * vB_8_0 + rC_5_0
        rC_5_0 = vA_5_9 * vB_9_0 + rC_5_0
        rC_5_0 = rC_5_0 * alpha
        rC_6_0 = 0.0
        rC_6_0 = vA_6_0 * vB_0_0 + rC_6_0
        rC_6_0 = vA_6_1 * vB_1_0 + rC_6_0
        rC_6_0 = vA_6_2 * vB_2_0 + rC_6_0
        rC_6_0 = vA_6_3 * vB_3_0 + rC_6_0
        rC_6_0 = vA_6_4 * vB_4_0 + rC_6_0
        rC_6_0 = vA_6_5 * vB_5_0 + rC_6_0
        rC_6_0 = vA_6_6 * vB_6_0 + rC_6_0
        rC_6_0 = vA_6_7 * vB_7_0 + rC_6_0
        rC_6_0 = vA_6_8 * vB_8_0 + rC_6_0
        rC_6_0 = vA_6_9 * vB_9_0 + rC_6_0
        rC_6_0 = rC_6_0 * alpha
        rC_7_0 = 0.0
        rC_7_0 = vA_7_0 * vB_0_0 + rC_7_0
        rC_7_0 = vA_7_1 * vB_1_0 + rC_7_0
        rC_7_0 = vA_7_2 * vB_2_0 + rC_7_0
        rC_7_0 = vA_7_3 * vB_3_0 + rC_7_0
        rC_7_0 = vA_7_4 * vB_4_0 + rC_7_0
        rC_7_0 = vA_7_5 * vB_5_0 + rC_7_0
        rC_7_0 = vA_7_6 * vB_6_0 + rC_7_0
        rC_7_0 = vA_7_7 * vB_7_0 + rC_7_0
        rC_7_0 = vA_7_8 * vB_8_0 + rC_7_0
        rC_7_0 = vA_7_9 * vB_9_0 + rC_7_0
        rC_7_0 = rC_7_0 * alpha
        rC_8_0 = 0.0
        rC_8_0 = vA_8_0 * vB_0_0 + rC_8_0
        rC_8_0 = vA_8_1 * vB_1_0 + rC_8_0
        rC_8_0 = vA_8_2 * vB_2_0 + rC_8_0
        rC_8_0 = vA_8_3 * vB_3_0 + rC_8_0
        rC_8_0 = vA_8_4 * vB_4_0 + rC_8_0
        rC_8_0 = vA_8_5 * vB_5_0 + rC_8_0
        rC_8_0 = vA_8_6 * vB_6_0 + rC_8_0
        rC_8_0 = vA_8_7 * vB_7_0 + rC_8_0
        rC_8_0 = vA_8_8 * vB_8_0 + rC_8_0
        rC_8_0 = vA_8_9 * vB_9_0 + rC_8_0
        rC_8_0 = rC_8_0 * alpha
        rC_9_0 = 0.0
        rC_9_0 = vA_9_0 * vB_0_0 + rC_9_0
        rC_9_0 = vA_9_1 * vB_1_0 + rC_9_0
        rC_9_0 = vA_9_2 * vB_2_0 + rC_9_0
        rC_9_0 = vA_9_3 * vB_3_0 + rC_9_0
        rC_9_0 = vA_9_4 * vB_4_0 + rC_9_0
        rC_9_0 = vA_9_5 * vB_5_0 + rC_9_0
        rC_9_0 = vA_9_6 * vB_6_0 + rC_9_0
        rC_9_0 = vA_9_7 * vB_7_0 + rC_9_0
        rC_9_0 = vA_9_8 * vB_8_0 + rC_9_0
        rC_9_0 = vA_9_9 * vB_9_0 + rC_9_0
        rC_9_0 = rC_9_0 * alpha
        rC_10_0 = 0.0
        rC_10_0 = vA_10_0 * vB_0_0 + rC_10_0
        rC_10_0 = vA_10_1 * vB_1_0 + rC_10_0
        rC_10_0 = vA_10_2 * vB_2_0 + rC_10_0
        rC_10_0 = vA_10_3 * vB_3_0 + rC_10_0
        rC_10_0 = vA_10_4 * vB_4_0 + rC_10_0
        rC_10_0 = vA_10_5 * vB_5_0 + rC_10_0
        rC_10_0 = vA_10_6 * vB_6_0 + rC_10_0
        rC_10_0 = vA_10_7 * vB_7_0 + rC_10_0
        rC_10_0 = vA_10_8 * vB_8_0 + rC_10_0
        rC_10_0 = vA_10_9 * vB_9_0 + rC_10_0
        rC_10_0 = rC_10_0 * alpha
        rC_11_0 = 0.0
        rC_11_0 = vA_11_0 * vB_0_0 + rC_11_0
        rC_11_0 = vA_11_1 * vB_1_0 + rC_11_0
        rC_11_0 = vA_11_2 * vB_2_0 + rC_11_0
        rC_11_0 = vA_11_3 * vB_3_0 + rC_11_0
        rC_11_0 = vA_11_4 * vB_4_0 + rC_11_0
        rC_11_0 = vA_11_5 * vB_5_0 + rC_11_0
        rC_11_0 = vA_11_6 * vB_6_0 + rC_11_0
        rC_11_0 = vA_11_7 * vB_7_0 + rC_11_0
        rC_11_0 = vA_11_8 * vB_8_0 + rC_11_0
        rC_11_0 = vA_11_9 * vB_9_0 + rC_11_0
        rC_11_0 = rC_11_0 * alpha
        rC_12_0 = 0.0
        rC_12_0 = vA_12_0 * vB_0_0 + rC_12_0
        rC_12_0 = vA_12_1 * vB_1_0 + rC_12_0
        rC_12_0 = vA_12_2 * vB_2_0 + rC_12_0
        rC_12_0 = vA_12_3 * vB_3_0 + rC_12_0
        rC_12_0 = vA_12_4 * vB_4_0 + rC_12_0
        rC_12_0 = vA_12_5 * vB_5_0 + rC_12_0
        rC_12_0 = vA_12_6 * vB_6_0 + rC_12_0
        rC_12_0 = vA_12_7 * vB_7_0 + rC_12_0
        rC_12_0 = vA_12_8 * vB_8_0 + rC_12_0
        rC_12_0 = vA_12_9 * vB_9_0 + rC_12_0
        rC_12_0 = rC_12_0 * alpha
        rC_13_0 = 0.0
        rC_13_0 = vA_13_0 * vB_0_0 + rC_13_0
        rC_13_0 = vA_13_1 * vB_1_0 + rC_13_0
        rC_13_0 = vA_13_2 * vB_2_0 + rC_13_0
        rC_13_0 = vA_13_3 * vB_3_0 + rC_13_0
        rC_13_0 = vA_13_4 * vB_4_0 + rC_13_0
        rC_13_0 = vA_13_5 * vB_5_0 + rC_13_0
        rC_13_0 = vA_13_6 * vB_6_0 + rC_13_0
        rC_13_0 = vA_13_7 * vB_7_0 + rC_13_0
        rC_13_0 = vA_13_8 * vB_8_0 + rC_13_0
        rC_13_0 = vA_13_9 * vB_9_0 + rC_13_0
        rC_13_0 = rC_13_0 * alpha
        rC_14_0 = 0.0
        rC_14_0 = vA_14_0 * vB_0_0 + rC_14_0
        rC_14_0 = vA_14_1 * vB_1_0 + rC_14_0
        rC_14_0 = vA_14_2 * vB_2_0 + rC_14_0
        rC_14_0 = vA_14_3 * vB_3_0 + rC_14_0
        rC_14_0 = vA_14_4 * vB_4_0 + rC_14_0
        rC_14_0 = vA_14_5 * vB_5_0 + rC_14_0
        rC_14_0 = vA_14_6 * vB_6_0 + rC_14_0
        rC_14_0 = vA_14_7 * vB_7_0 + rC_14_0
        rC_14_0 = vA_14_8 * vB_8_0 + rC_14_0
        rC_14_0 = vA_14_9 * vB_9_0 + rC_14_0
        rC_14_0 = rC_14_0 * alpha
        rC_15_0 = 0.0
        rC_15_0 = vA_15_0 * vB_0_0 + rC_15_0
        rC_15_0 = vA_15_1 * vB_1_0 + rC_15_0
        rC_15_0 = vA_15_2 * vB_2_0 + rC_15_0
        rC_15_0 = vA_15_3 * vB_3_0 + rC_15_0
        rC_15_0 = vA_15_4 * vB_4_0 + rC_15_0
        rC_15_0 = vA_15_5 * vB_5_0 + rC_15_0
        rC_15_0 = vA_15_6 * vB_6_0 + rC_15_0
        rC_15_0 = vA_15_7 * vB_7_0 + rC_15_0
        rC_15_0 = vA_15_8 * vB_8_0 + rC_15_0
        rC_15_0 = vA_15_9 * vB_9_0 + rC_15_0
        rC_15_0 = rC_15_0 * alpha
        rC_16_0 = 0.0
        rC_16_0 = vA_16_0 * vB_0_0 + rC_16_0
        rC_16_0 = vA_16_1 * vB_1_0 + rC_16_0
        rC_16_0 = vA_16_2 * vB_2_0 + rC_16_0
        rC_16_0 = vA_16_3 * vB_3_0 + rC_16_0
        rC_16_0 = vA_16_4 * vB_4_0 + rC_16_0
        rC_16_0 = vA_16_5 * vB_5_0 + rC_16_0
        rC_16_0 = vA_16_6 * vB_6_0 + rC_16_0
        rC_16_0 = vA_16_7 * vB_7_0 + rC_16_0
        rC_16_0 = vA_16_8 * vB_8_0 + rC_16_0
        rC_16_0 = vA_16_9 * vB_9_0 + rC_16_0
        rC_16_0 = rC_16_0 * alpha
        rC_17_0 = 0.0
        rC_17_0 = vA_17_0 * vB_0_0 + rC_17_0
        rC_17_0 = vA_17_1 * vB_1_0 + rC_17_0
        rC_17_0 = vA_17_2 * vB_2_0 + rC_17_0
        rC_17_0 = vA_17_3 * vB_3_0 + rC_17_0
        rC_17_0 = vA_17_4 * vB_4_0 + rC_17_0
        rC_17_0 = vA_17_5 * vB_5_0 + rC_17_0
        rC_17_0 = vA_17_6 * vB_6_0 + rC_17_0
        rC_17_0 = vA_17_7 * vB_7_0 + rC_17_0
        rC_17_0 = vA_17_8 * vB_8_0 + rC_17_0
        rC_17_0 = vA_17_9 * vB_9_0 + rC_17_0
        rC_17_0 = rC_17_0 * alpha
        rC_18_0 = 0.0
        rC_18_0 = vA_18_0 * vB_0_0 + rC_18_0
        rC_18_0 = vA_18_1 * vB_1_0 + rC_18_0
        rC_18_0 = vA_18_2 * vB_2_0 + rC_18_0
        rC_18_0 = vA_18_3 * vB_3_0 + rC_18_0
        rC_18_0 = vA_18_4 * vB_4_0 + rC_18_0
        rC_18_0 = vA_18_5 * vB_5_0 + rC_18_0
        rC_18_0 = vA_18_6 * vB_6_0 + rC_18_0
        rC_18_0 = vA_18_7 * vB_7_0 + rC_18_0
        rC_18_0 = vA_18_8 * vB_8_0 + rC_18_0
        rC_18_0 = vA_18_9 * vB_9_0 + rC_18_0
        rC_18_0 = rC_18_0 * alpha
        rC_19_0 = 0.0
        rC_19_0 = vA_19_0 * vB_0_0 + rC_19_0
        rC_19_0 = vA_19_1 * vB_1_0 + rC_19_0
        rC_19_0 = vA_19_2 * vB_2_0 + rC_19_0
        rC_19_0 = vA_19_3 * vB_3_0 + rC_19_0
        rC_19_0 = vA_19_4 * vB_4_0 + rC_19_0
        rC_19_0 = vA_19_5 * vB_5_0 + rC_19_0
        rC_19_0 = vA_19_6 * vB_6_0 + rC_19_0
        rC_19_0 = vA_19_7 * vB_7_0 + rC_19_0
        rC_19_0 = vA_19_8 * vB_8_0 + rC_19_0
        rC_19_0 = vA_19_9 * vB_9_0 + rC_19_0
        rC_19_0 = rC_19_0 * alpha
        rC_0_1 = 0.0
        rC_0_1 = vA_0_0 * vB_0_1 + rC_0_1
        rC_0_1 = vA_0_1 * vB_1_1 + rC_0_1
        rC_0_1 = vA_0_2 * vB_2_1 + rC_0_1
        rC_0_1 = vA_0_3 * vB_3_1 + rC_0_1
        rC_0_1 = vA_0_4 * vB_4_1 + rC_0_1
        rC_0_1 = vA_0_5 * vB_5_1 + rC_0_1
        rC_0_1 = vA_0_6 * vB_6_1 + rC_0_1
        rC_0_1 = vA_0_7 * vB_7_1 + rC_0_1
        rC_0_1 = vA_0_8 * vB_8_1 + rC_0_1
        rC_0_1 = vA_0_9 * vB_9_1 + rC_0_1
        rC_0_1 = rC_0_1 * alpha
        rC_1_1 = 0.0
        rC_1_1 = vA_1_0 * vB_0_1 + rC_1_1
        rC_1_1 = vA_1_1 * vB_1_1 + rC_1_1
        rC_1_1 = vA_1_2 * vB_2_1 + rC_1_1
        rC_1_1 = vA_1_3 * vB_3_1 + rC_1_1
        rC_1_1 = vA_1_4 * vB_4_1 + rC_1_1
        rC_1_1 = vA_1_5 * vB_5_1 + rC_1_1
        rC_1_1 = vA_1_6 * vB_6_1 + rC_1_1
        rC_1_1 = vA_1_7 * vB_7_1 + rC_1_1
        rC_1_1 = vA_1_8 * vB_8_1 + rC_1_1
        rC_1_1 = vA_1_9 * vB_9_1 + rC_1_1
        rC_1_1 = rC_1_1 * alpha
        rC_2_1 = 0.0
        rC_2_1 = vA_2_0 * vB_0_1 + rC_2_1
        rC_2_1 = vA_2_1 * vB_1_1 + rC_2_1
        rC_2_1 = vA_2_2 * vB_2_1 + rC_2_1
        rC_2_1 = vA_2_3 * vB_3_1 + rC_2_1
        rC_2_1 = vA_2_4 * vB_4_1 + rC_2_1
        rC_2_1 = vA_2_5 * vB_5_1 + rC_2_1
        rC_2_1 = vA_2_6 * vB_6_1 + rC_2_1
        rC_2_1 = vA_2_7 * vB_7_1 + rC_2_1
        rC_2_1 = vA_2_8 * vB_8_1 + rC_2_1
        rC_2_1 = vA_2_9 * vB_9_1 + rC_2_1
        rC_2_1 = rC_2_1 * alpha
        rC_3_1 = 0.0
        rC_3_1 = vA_3_0 * vB_0_1 + rC_3_1
        rC_3_1 = vA_3_1 * vB_1_1 + rC_3_1
        rC_3_1 = vA_3_2 * vB_2_1 + rC_3_1
        rC_3_1 = vA_3_3 * vB_3_1 + rC_3_1
        rC_3_1 = vA_3_4 * vB_4_1 + rC_3_1
        rC_3_1 = vA_3_5 * vB_5_1 + rC_3_1
        rC_3_1 = vA_3_6 * vB_6_1 + rC_3_1
        rC_3_1 = vA_3_7 * vB_7_1 + rC_3_1
        rC_3_1 = vA_3_8 * vB_8_1 + rC_3_1
        rC_3_1 = vA_3_9 * vB_9_1 + rC_3_1
        rC_3_1 = rC_3_1 * alpha
        rC_4_1 = 0.0
        rC_4_1 = vA_4_0 * vB_0_1 + rC_4_1
        rC_4_1 = vA_4_1 * vB_1_1 + rC_4_1
        rC_4_1 = vA_4_2 * vB_2_1 + rC_4_1
        rC_4_1 = vA_4_3 * vB_3_1 + rC_4_1
        rC_4_1 = vA_4_4 * vB_4_1 + rC_4_1
        rC_4_1 = vA_4_5 * vB_5_1 + rC_4_1
        rC_4_1 = vA_4_6 * vB_6_1 + rC_4_1
        rC_4_1 = vA_4_7 * vB_7_1 + rC_4_1
        rC_4_1 = vA_4_8 * vB_8_1 + rC_4_1
        rC_4_1 = vA_4_9 * vB_9_1 + rC_4_1
        rC_4_1 = rC_4_1 * alpha
        rC_5_1 = 0.0
        rC_5_1 = vA_5_0 * vB_0_1 + rC_5_1
        rC_5_1 = vA_5_1 * vB_1_1 + rC_5_1
        rC_5_1 = vA_5_2 * vB_2_1 + rC_5_1
        rC_5_1 = vA_5_3 * vB_3_1 + rC_5_1
        rC_5_1 = vA_5_4 * vB_4_1 + rC_5_1
        rC_5_1 = vA_5_5 * vB_5_1 + rC_5_1
        rC_5_1 = vA_5_6 * vB_6_1 + rC_5_1
        rC_5_1 = vA_5_7 * vB_7_1 + rC_5_1
        rC_5_1 = vA_5_8 * vB_8_1 + rC_5_1
        rC_5_1 = vA_5_9 * vB_9_1 + rC_5_1
        rC_5_1 = rC_5_1 * alpha
        rC_6_1 = 0.0
        rC_6_1 = vA_6_0 * vB_0_1 + rC_6_1
        rC_6_1 = vA_6_1 * vB_1_1 + rC_6_1
        rC_6_1 = vA_6_2 * vB_2_1 + rC_6_1
        rC_6_1 = vA_6_3 * vB_3_1 + rC_6_1
        rC_6_1 = vA_6_4 * vB_4_1 + rC_6_1
        rC_6_1 = vA_6_5 * vB_5_1 + rC_6_1
        rC_6_1 = vA_6_6 * vB_6_1 + rC_6_1
        rC_6_1 = vA_6_7 * vB_7_1 + rC_6_1
        rC_6_1 = vA_6_8 * vB_8_1 + rC_6_1
        rC_6_1 = vA_6_9 * vB_9_1 + rC_6_1
        rC_6_1 = rC_6_1 * alpha
        rC_7_1 = 0.0
        rC_7_1 = vA_7_0 * vB_0_1 + rC_7_1
        rC_7_1 = vA_7_1 * vB_1_1 + rC_7_1
        rC_7_1 = vA_7_2 * vB_2_1 + rC_7_1
        rC_7_1 = vA_7_3 * vB_3_1 + rC_7_1
        rC_7_1 = vA_7_4 * vB_4_1 + rC_7_1
        rC_7_1 = vA_7_5 * vB_5_1 + rC_7_1
        rC_7_1 = vA_7_6 * vB_6_1 + rC_7_1
        rC_7_1 = vA_7_7 * vB_7_1 + rC_7_1
        rC_7_1 = vA_7_8 * vB_8_1 + rC_7_1
        rC_7_1 = vA_7_9 * vB_9_1 + rC_7_1
        rC_7_1 = rC_7_1 * alpha
        rC_8_1 = 0.0
        rC_8_1 = vA_8_0 * vB_0_1 + rC_8_1
        rC_8_1 = vA_8_1 * vB_1_1 + rC_8_1
        rC_8_1 = vA_8_2 * vB_2_1 + rC_8_1
        rC_8_1 = vA_8_3 * vB_3_1 + rC_8_1
        rC_8_1 = vA_8_4 * vB_4_1 + rC_8_1
        rC_8_1 = vA_8_5 * vB_5_1 + rC_8_1
        rC_8_1 = vA_8_6 * vB_6_1 + rC_8_1
        rC_8_1 = vA_8_7 * vB_7_1 + rC_8_1
        rC_8_1 = vA_8_8 * vB_8_1 + rC_8_1
        rC_8_1 = vA_8_9 * vB_9_1 + rC_8_1
        rC_8_1 = rC_8_1 * alpha
        rC_9_1 = 0.0
        rC_9_1 = vA_9_0 * vB_0_1 + rC_9_1
        rC_9_1 = vA_9_1 * vB_1_1 + rC_9_1
        rC_9_1 = vA_9_2 * vB_2_1 + rC_9_1
        rC_9_1 = vA_9_3 * vB_3_1 + rC_9_1
        rC_9_1 = vA_9_4 * vB_4_1 + rC_9_1
        rC_9_1 = vA_9_5 * vB_5_1 + rC_9_1
        rC_9_1 = vA_9_6 * vB_6_1 + rC_9_1
        rC_9_1 = vA_9_7 * vB_7_1 + rC_9_1
        rC_9_1 = vA_9_8 * vB_8_1 + rC_9_1
        rC_9_1 = vA_9_9 * vB_9_1 + rC_9_1
        rC_9_1 = rC_9_1 * alpha
        rC_10_1 = 0.0
        rC_10_1 = vA_10_0 * vB_0_1 + rC_10_1
        rC_10_1 = vA_10_1 * vB_1_1 + rC_10_1
        rC_10_1 = vA_10_2 * vB_2_1 + rC_10_1
        rC_10_1 = vA_10_3 * vB_3_1 + rC_10_1
        rC_10_1 = vA_10_4 * vB_4_1 + rC_10_1
        rC_10_1 = vA_10_5 * vB_5_1 + rC_10_1
        rC_10_1 = vA_10_6 * vB_6_1 + rC_10_1
        rC_10_1 = vA_10_7 * vB_7_1 + rC_10_1
        rC_10_1 = vA_10_8 * vB_8_1 + rC_10_1
        rC_10_1 = vA_10_9 * vB_9_1 + rC_10_1
        rC_10_1 = rC_10_1 * alpha
        rC_11_1 = 0.0
        rC_11_1 = vA_11_0 * vB_0_1 + rC_11_1
        rC_11_1 = vA_11_1 * vB_1_1 + rC_11_1
        rC_11_1 = vA_11_2 * vB_2_1 + rC_11_1
        rC_11_1 = vA_11_3 * vB_3_1 + rC_11_1
        rC_11_1 = vA_11_4 * vB_4_1 + rC_11_1
        rC_11_1 = vA_11_5 * vB_5_1 + rC_11_1
        rC_11_1 = vA_11_6 * vB_6_1 + rC_11_1
        rC_11_1 = vA_11_7 * vB_7_1 + rC_11_1
        rC_11_1 = vA_11_8 * vB_8_1 + rC_11_1
        rC_11_1 = vA_11_9 * vB_9_1 + rC_11_1
        rC_11_1 = rC_11_1 * alpha
        rC_12_1 = 0.0
        rC_12_1 = vA_12_0 * vB_0_1 + rC_12_1
        rC_12_1 = vA_12_1 * vB_1_1 + rC_12_1
        rC_12_1 = vA_12_2 * vB_2_1 + rC_12_1
        rC_12_1 = vA_12_3 * vB_3_1 + rC_12_1
        rC_12_1 = vA_12_4 * vB_4_1 + rC_12_1
        rC_12_1 = vA_12_5 * vB_5_1 + rC_12_1
        rC_12_1 = vA_12_6 * vB_6_1 + rC_12_1
        rC_12_1 = vA_12_7 * vB_7_1 + rC_12_1
        rC_12_1 = vA_12_8 * vB_8_1 + rC_12_1
        rC_12_1 = vA_12_9 * vB_9_1 + rC_12_1
        rC_12_1 = rC_12_1 * alpha
        rC_13_1 = 0.0
        rC_13_1 = vA_13_0 * vB_0_1 + rC_13_1
        rC_13_1 = vA_13_1 * vB_1_1 + rC_13_1
        rC_13_1 = vA_13_2 * vB_2_1 + rC_13_1
        rC_13_1 = vA_13_3 * vB_3_1 + rC_13_1
        rC_13_1 = vA_13_4 * vB_4_1 + rC_13_1
        rC_13_1 = vA_13_5 * vB_5_1 + rC_13_1
        rC_13_1 = vA_13_6 * vB_6_1 + rC_13_1
        rC_13_1 = vA_13_7 * vB_7_1 + rC_13_1
        rC_13_1 = vA_13_8 * vB_8_1 + rC_13_1
        rC_13_1 = vA_13_9 * vB_9_1 + rC_13_1
        rC_13_1 = rC_13_1 * alpha
        rC_14_1 = 0.0
        rC_14_1 = vA_14_0 * vB_0_1 + rC_14_1
        rC_14_1 = vA_14_1 * vB_1_1 + rC_14_1
        rC_14_1 = vA_14_2 * vB_2_1 + rC_14_1
        rC_14_1 = vA_14_3 * vB_3_1 + rC_14_1
        rC_14_1 = vA_14_4 * vB_4_1 + rC_14_1
        rC_14_1 = vA_14_5 * vB_5_1 + rC_14_1
        rC_14_1 = vA_14_6 * vB_6_1 + rC_14_1
        rC_14_1 = vA_14_7 * vB_7_1 + rC_14_1
        rC_14_1 = vA_14_8 * vB_8_1 + rC_14_1
        rC_14_1 = vA_14_9 * vB_9_1 + rC_14_1
        rC_14_1 = rC_14_1 * alpha
        rC_15_1 = 0.0
        rC_15_1 = vA_15_0 * vB_0_1 + rC_15_1
        rC_15_1 = vA_15_1 * vB_1_1 + rC_15_1
        rC_15_1 = vA_15_2 * vB_2_1 + rC_15_1
        rC_15_1 = vA_15_3 * vB_3_1 + rC_15_1
        rC_15_1 = vA_15_4 * vB_4_1 + rC_15_1
        rC_15_1 = vA_15_5 * vB_5_1 + rC_15_1
        rC_15_1 = vA_15_6 * vB_6_1 + rC_15_1
        rC_15_1 = vA_15_7 * vB_7_1 + rC_15_1
        rC_15_1 = vA_15_8 * vB_8_1 + rC_15_1
        rC_15_1 = vA_15_9 * vB_9_1 + rC_15_1
        rC_15_1 = rC_15_1 * alpha
        rC_16_1 = 0.0
        rC_16_1 = vA_16_0 * vB_0_1 + rC_16_1
        rC_16_1 = vA_16_1 * vB_1_1 + rC_16_1
        rC_16_1 = vA_16_2 * vB_2_1 + rC_16_1
        rC_16_1 = vA_16_3 * vB_3_1 + rC_16_1
        rC_16_1 = vA_16_4 * vB_4_1 + rC_16_1
        rC_16_1 = vA_16_5 * vB_5_1 + rC_16_1
        rC_16_1 = vA_16_6 * vB_6_1 + rC_16_1
        rC_16_1 = vA_16_7 * vB_7_1 + rC_16_1
        rC_16_1 = vA_16_8 * vB_8_1 + rC_16_1
        rC_16_1 = vA_16_9 * vB_9_1 + rC_16_1
        rC_16_1 = rC_16_1 * alpha
        rC_17_1 = 0.0
        rC_17_1 = vA_17_0 * vB_0_1 + rC_17_1
        rC_17_1 = vA_17_1 * vB_1_1 + rC_17_1
        rC_17_1 = vA_17_2 * vB_2_1 + rC_17_1
        rC_17_1 = vA_17_3 * vB_3_1 + rC_17_1
        rC_17_1 = vA_17_4 * vB_4_1 + rC_17_1
        rC_17_1 = vA_17_5 * vB_5_1 + rC_17_1
        rC_17_1 = vA_17_6 * vB_6_1 + rC_17_1
        rC_17_1 = vA_17_7 * vB_7_1 + rC_17_1
        rC_17_1 = vA_17_8 * vB_8_1 + rC_17_1
        rC_17_1 = vA_17_9 * vB_9_1 + rC_17_1
        rC_17_1 = rC_17_1 * alpha
        rC_18_1 = 0.0
        rC_18_1 = vA_18_0 * vB_0_1 + rC_18_1
        rC_18_1 = vA_18_1 * vB_1_1 + rC_18_1
        rC_18_1 = vA_18_2 * vB_2_1 + rC_18_1
        rC_18_1 = vA_18_3 * vB_3_1 + rC_18_1
        rC_18_1 = vA_18_4 * vB_4_1 + rC_18_1
        rC_18_1 = vA_18_5 * vB_5_1 + rC_18_1
        rC_18_1 = vA_18_6 * vB_6_1 + rC_18_1
        rC_18_1 = vA_18_7 * vB_7_1 + rC_18_1
        rC_18_1 = vA_18_8 * vB_8_1 + rC_18_1
        rC_18_1 = vA_18_9 * vB_9_1 + rC_18_1
        rC_18_1 = rC_18_1 * alpha
        rC_19_1 = 0.0
        rC_19_1 = vA_19_0 * vB_0_1 + rC_19_1
        rC_19_1 = vA_19_1 * vB_1_1 + rC_19_1
        rC_19_1 = vA_19_2 * vB_2_1 + rC_19_1
        rC_19_1 = vA_19_3 * vB_3_1 + rC_19_1
        rC_19_1 = vA_19_4 * vB_4_1 + rC_19_1
        rC_19_1 = vA_19_5 * vB_5_1 + rC_19_1
        rC_19_1 = vA_19_6 * vB_6_1 + rC_19_1
        rC_19_1 = vA_19_7 * vB_7_1 + rC_19_1
        rC_19_1 = vA_19_8 * vB_8_1 + rC_19_1
        rC_19_1 = vA_19_9 * vB_9_1 + rC_19_1
        rC_19_1 = rC_19_1 * alpha
        rC_0_2 = 0.0
        rC_0_2 = vA_0_0 * vB_0_2 + rC_0_2
        rC_0_2 = vA_0_1 * vB_1_2 + rC_0_2
        rC_0_2 = vA_0_2 * vB_2_2 + rC_0_2
        rC_0_2 = vA_0_3 * vB_3_2 + rC_0_2
        rC_0_2 = vA_0_4 * vB_4_2 + rC_0_2
        rC_0_2 = vA_0_5 * vB_5_2 + rC_0_2
        rC_0_2 = vA_0_6 * vB_6_2 + rC_0_2
        rC_0_2 = vA_0_7 * vB_7_2 + rC_0_2
        rC_0_2 = vA_0_8 * vB_8_2 + rC_0_2
        rC_0_2 = vA_0_9 * vB_9_2 + rC_0_2
        rC_0_2 = rC_0_2 * alpha
        rC_1_2 = 0.0
        rC_1_2 = vA_1_0 * vB_0_2 + rC_1_2
        rC_1_2 = vA_1_1 * vB_1_2 + rC_1_2
        rC_1_2 = vA_1_2 * vB_2_2 + rC_1_2
        rC_1_2 = vA_1_3 * vB_3_2 + rC_1_2
        rC_1_2 = vA_1_4 * vB_4_2 + rC_1_2
        rC_1_2 = vA_1_5 * vB_5_2 + rC_1_2
        rC_1_2 = vA_1_6 * vB_6_2 + rC_1_2
        rC_1_2 = vA_1_7 * vB_7_2 + rC_1_2
        rC_1_2 = vA_1_8 * vB_8_2 + rC_1_2
        rC_1_2 = vA_1_9 * vB_9_2 + rC_1_2
        rC_1_2 = rC_1_2 * alpha
        rC_2_2 = 0.0
        rC_2_2 = vA_2_0 * vB_0_2 + rC_2_2
        rC_2_2 = vA_2_1 * vB_1_2 + rC_2_2
        rC_2_2 = vA_2_2 * vB_2_2 + rC_2_2
        rC_2_2 = vA_2_3 * vB_3_2 + rC_2_2
        rC_2_2 = vA_2_4 * vB_4_2 + rC_2_2
        rC_2_2 = vA_2_5 * vB_5_2 + rC_2_2
        rC_2_2 = vA_2_6 * vB_6_2 + rC_2_2
        rC_2_2 = vA_2_7 * vB_7_2 + rC_2_2
        rC_2_2 = vA_2_8 * vB_8_2 + rC_2_2
        rC_2_2 = vA_2_9 * vB_9_2 + rC_2_2
        rC_2_2 = rC_2_2 * alpha
        rC_3_2 = 0.0
        rC_3_2 = vA_3_0 * vB_0_2 + rC_3_2
        rC_3_2 = vA_3_1 * vB_1_2 + rC_3_2
        rC_3_2 = vA_3_2 * vB_2_2 + rC_3_2
        rC_3_2 = vA_3_3 * vB_3_2 + rC_3_2
        rC_3_2 = vA_3_4 * vB_4_2 + rC_3_2
        rC_3_2 = vA_3_5 * vB_5_2 + rC_3_2
        rC_3_2 = vA_3_6 * vB_6_2 + rC_3_2
        rC_3_2 = vA_3_7 * vB_7_2 + rC_3_2
        rC_3_2 = vA_3_8 * vB_8_2 + rC_3_2
        rC_3_2 = vA_3_9 * vB_9_2 + rC_3_2
        rC_3_2 = rC_3_2 * alpha
        rC_4_2 = 0.0
        rC_4_2 = vA_4_0 * vB_0_2 + rC_4_2
        rC_4_2 = vA_4_1 * vB_1_2 + rC_4_2
        rC_4_2 = vA_4_2 * vB_2_2 + rC_4_2
        rC_4_2 = vA_4_3 * vB_3_2 + rC_4_2
        rC_4_2 = vA_4_4 * vB_4_2 + rC_4_2
        rC_4_2 = vA_4_5 * vB_5_2 + rC_4_2
        rC_4_2 = vA_4_6 * vB_6_2 + rC_4_2
        rC_4_2 = vA_4_7 * vB_7_2 + rC_4_2
        rC_4_2 = vA_4_8 * vB_8_2 + rC_4_2
        rC_4_2 = vA_4_9 * vB_9_2 + rC_4_2
        rC_4_2 = rC_4_2 * alpha
        rC_5_2 = 0.0
        rC_5_2 = vA_5_0 * vB_0_2 + rC_5_2
        rC_5_2 = vA_5_1 * vB_1_2 + rC_5_2
        rC_5_2 = vA_5_2 * vB_2_2 + rC_5_2
        rC_5_2 = vA_5_3 * vB_3_2 + rC_5_2
        rC_5_2 = vA_5_4 * vB_4_2 + rC_5_2
        rC_5_2 = vA_5_5 * vB_5_2 + rC_5_2
        rC_5_2 = vA_5_6 * vB_6_2 + rC_5_2
        rC_5_2 = vA_5_7 * vB_7_2 + rC_5_2
        rC_5_2 = vA_5_8 * vB_8_2 + rC_5_2
        rC_5_2 = vA_5_9 * vB_9_2 + rC_5_2
        rC_5_2 = rC_5_2 * alpha
        rC_6_2 = 0.0
        rC_6_2 = vA_6_0 * vB_0_2 + rC_6_2
        rC_6_2 = vA_6_1 * vB_1_2 + rC_6_2
        rC_6_2 = vA_6_2 * vB_2_2 + rC_6_2
        rC_6_2 = vA_6_3 * vB_3_2 + rC_6_2
        rC_6_2 = vA_6_4 * vB_4_2 + rC_6_2
        rC_6_2 = vA_6_5 * vB_5_2 + rC_6_2
        rC_6_2 = vA_6_6 * vB_6_2 + rC_6_2
        rC_6_2 = vA_6_7 * vB_7_2 + rC_6_2
        rC_6_2 = vA_6_8 * vB_8_2 + rC_6_2
        rC_6_2 = vA_6_9 * vB_9_2 + rC_6_2
        rC_6_2 = rC_6_2 * alpha
        rC_7_2 = 0.0
        rC_7_2 = vA_7_0 * vB_0_2 + rC_7_2
        rC_7_2 = vA_7_1 * vB_1_2 + rC_7_2
        rC_7_2 = vA_7_2 * vB_2_2 + rC_7_2
        rC_7_2 = vA_7_3 * vB_3_2 + rC_7_2
        rC_7_2 = vA_7_4 * vB_4_2 + rC_7_2
        rC_7_2 = vA_7_5 * vB_5_2 + rC_7_2
        rC_7_2 = vA_7_6 * vB_6_2 + rC_7_2
        rC_7_2 = vA_7_7 * vB_7_2 + rC_7_2
        rC_7_2 = vA_7_8 * vB_8_2 + rC_7_2
        rC_7_2 = vA_7_9 * vB_9_2 + rC_7_2
        rC_7_2 = rC_7_2 * alpha
        rC_8_2 = 0.0
        rC_8_2 = vA_8_0 * vB_0_2 + rC_8_2
        rC_8_2 = vA_8_1 * vB_1_2 + rC_8_2
        rC_8_2 = vA_8_2 * vB_2_2 + rC_8_2
        rC_8_2 = vA_8_3 * vB_3_2 + rC_8_2
        rC_8_2 = vA_8_4 * vB_4_2 + rC_8_2
        rC_8_2 = vA_8_5 * vB_5_2 + rC_8_2
        rC_8_2 = vA_8_6 * vB_6_2 + rC_8_2
        rC_8_2 = vA_8_7 * vB_7_2 + rC_8_2
        rC_8_2 = vA_8_8 * vB_8_2 + rC_8_2
        rC_8_2 = vA_8_9 * vB_9_2 + rC_8_2
        rC_8_2 = rC_8_2 * alpha
        rC_9_2 = 0.0
        rC_9_2 = vA_9_0 * vB_0_2 + rC_9_2
        rC_9_2 = vA_9_1 * vB_1_2 + rC_9_2
        rC_9_2 = vA_9_2 * vB_2_2 + rC_9_2
        rC_9_2 = vA_9_3 * vB_3_2 + rC_9_2
        rC_9_2 = vA_9_4 * vB_4_2 + rC_9_2
        rC_9_2 = vA_9_5 * vB_5_2 + rC_9_2
        rC_9_2 = vA_9_6 * vB_6_2 + rC_9_2
        rC_9_2 = vA_9_7 * vB_7_2 + rC_9_2
        rC_9_2 = vA_9_8 * vB_8_2 + rC_9_2
        rC_9_2 = vA_9_9 * vB_9_2 + rC_9_2
        rC_9_2 = rC_9_2 * alpha
        rC_10_2 = 0.0
        rC_10_2 = vA_10_0 * vB_0_2 + rC_10_2
        rC_10_2 = vA_10_1 * vB_1_2 + rC_10_2
        rC_10_2 = vA_10_2 * vB_2_2 + rC_10_2
        rC_10_2 = vA_10_3 * vB_3_2 + rC_10_2
        rC_10_2 = vA_10_4 * vB_4_2 + rC_10_2
        rC_10_2 = vA_10_5 * vB_5_2 + rC_10_2
        rC_10_2 = vA_10_6 * vB_6_2 + rC_10_2
        rC_10_2 = vA_10_7 * vB_7_2 + rC_10_2
        rC_10_2 = vA_10_8 * vB_8_2 + rC_10_2
        rC_10_2 = vA_10_9 * vB_9_2 + rC_10_2
        rC_10_2 = rC_10_2 * alpha
        rC_11_2 = 0.0
        rC_11_2 = vA_11_0 * vB_0_2 + rC_11_2
        rC_11_2 = vA_11_1 * vB_1_2 + rC_11_2
        rC_11_2 = vA_11_2 * vB_2_2 + rC_11_2
        rC_11_2 = vA_11_3 * vB_3_2 + rC_11_2
        rC_11_2 = vA_11_4 * vB_4_2 + rC_11_2
        rC_11_2 = vA_11_5 * vB_5_2 + rC_11_2
        rC_11_2 = vA_11_6 * vB_6_2 + rC_11_2
        rC_11_2 = vA_11_7 * vB_7_2 + rC_11_2
        rC_11_2 = vA_11_8 * vB_8_2 + rC_11_2
        rC_11_2 = vA_11_9 * vB_9_2 + rC_11_2
        rC_11_2 = rC_11_2 * alpha
        rC_12_2 = 0.0
        rC_12_2 = vA_12_0 * vB_0_2 + rC_12_2
        rC_12_2 = vA_12_1 * vB_1_2 + rC_12_2
        rC_12_2 = vA_12_2 * vB_2_2 + rC_12_2
        rC_12_2 = vA_12_3 * vB_3_2 + rC_12_2
        rC_12_2 = vA_12_4 * vB_4_2 + rC_12_2
        rC_12_2 = vA_12_5 * vB_5_2 + rC_12_2
        rC_12_2 = vA_12_6 * vB_6_2 + rC_12_2
        rC_12_2 = vA_12_7 * vB_7_2 + rC_12_2
        rC_12_2 = vA_12_8 * vB_8_2 + rC_12_2
        rC_12_2 = vA_12_9 * vB_9_2 + rC_12_2
        rC_12_2 = rC_12_2 * alpha
        rC_13_2 = 0.0
        rC_13_2 = vA_13_0 * vB_0_2 + rC_13_2
        rC_13_2 = vA_13_1 * vB_1_2 + rC_13_2
        rC_13_2 = vA_13_2 * vB_2_2 + rC_13_2
        rC_13_2 = vA_13_3 * vB_3_2 + rC_13_2
        rC_13_2 = vA_13_4 * vB_4_2 + rC_13_2
        rC_13_2 = vA_13_5 * vB_5_2 + rC_13_2
        rC_13_2 = vA_13_6 * vB_6_2 + rC_13_2
        rC_13_2 = vA_13_7 * vB_7_2 + rC_13_2
        rC_13_2 = vA_13_8 * vB_8_2 + rC_13_2
        rC_13_2 = vA_13_9 * vB_9_2 + rC_13_2
        rC_13_2 = rC_13_2 * alpha
        rC_14_2 = 0.0
        rC_14_2 = vA_14_0 * vB_0_2 + rC_14_2
        rC_14_2 = vA_14_1 * vB_1_2 + rC_14_2
        rC_14_2 = vA_14_2 * vB_2_2 + rC_14_2
        rC_14_2 = vA_14_3 * vB_3_2 + rC_14_2
        rC_14_2 = vA_14_4 * vB_4_2 + rC_14_2
        rC_14_2 = vA_14_5 * vB_5_2 + rC_14_2
        rC_14_2 = vA_14_6 * vB_6_2 + rC_14_2
        rC_14_2 = vA_14_7 * vB_7_2 + rC_14_2
        rC_14_2 = vA_14_8 * vB_8_2 + rC_14_2
        rC_14_2 = vA_14_9 * vB_9_2 + rC_14_2
        rC_14_2 = rC_14_2 * alpha
        rC_15_2 = 0.0
        rC_15_2 = vA_15_0 * vB_0_2 + rC_15_2
        rC_15_2 = vA_15_1 * vB_1_2 + rC_15_2
        rC_15_2 = vA_15_2 * vB_2_2 + rC_15_2
        rC_15_2 = vA_15_3 * vB_3_2 + rC_15_2
        rC_15_2 = vA_15_4 * vB_4_2 + rC_15_2
        rC_15_2 = vA_15_5 * vB_5_2 + rC_15_2
        rC_15_2 = vA_15_6 * vB_6_2 + rC_15_2
        rC_15_2 = vA_15_7 * vB_7_2 + rC_15_2
        rC_15_2 = vA_15_8 * vB_8_2 + rC_15_2
        rC_15_2 = vA_15_9 * vB_9_2 + rC_15_2
        rC_15_2 = rC_15_2 * alpha
        rC_16_2 = 0.0
        rC_16_2 = vA_16_0 * vB_0_2 + rC_16_2
        rC_16_2 = vA_16_1 * vB_1_2 + rC_16_2
        rC_16_2 = vA_16_2 * vB_2_2 + rC_16_2
        rC_16_2 = vA_16_3 * vB_3_2 + rC_16_2
        rC_16_2 = vA_16_4 * vB_4_2 + rC_16_2
        rC_16_2 = vA_16_5 * vB_5_2 + rC_16_2
        rC_16_2 = vA_16_6 * vB_6_2 + rC_16_2
        rC_16_2 = vA_16_7 * vB_7_2 + rC_16_2
        rC_16_2 = vA_16_8 * vB_8_2 + rC_16_2
        rC_16_2 = vA_16_9 * vB_9_2 + rC_16_2
        rC_16_2 = rC_16_2 * alpha
        rC_17_2 = 0.0
        rC_17_2 = vA_17_0 * vB_0_2 + rC_17_2
        rC_17_2 = vA_17_1 * vB_1_2 + rC_17_2
        rC_17_2 = vA_17_2 * vB_2_2 + rC_17_2
        rC_17_2 = vA_17_3 * vB_3_2 + rC_17_2
        rC_17_2 = vA_17_4 * vB_4_2 + rC_17_2
        rC_17_2 = vA_17_5 * vB_5_2 + rC_17_2
        rC_17_2 = vA_17_6 * vB_6_2 + rC_17_2
        rC_17_2 = vA_17_7 * vB_7_2 + rC_17_2
        rC_17_2 = vA_17_8 * vB_8_2 + rC_17_2
        rC_17_2 = vA_17_9 * vB_9_2 + rC_17_2
        rC_17_2 = rC_17_2 * alpha
        rC_18_2 = 0.0
        rC_18_2 = vA_18_0 * vB_0_2 + rC_18_2
        rC_18_2 = vA_18_1 * vB_1_2 + rC_18_2
        rC_18_2 = vA_18_2 * vB_2_2 + rC_18_2
        rC_18_2 = vA_18_3 * vB_3_2 + rC_18_2
        rC_18_2 = vA_18_4 * vB_4_2 + rC_18_2
        rC_18_2 = vA_18_5 * vB_5_2 + rC_18_2
        rC_18_2 = vA_18_6 * vB_6_2 + rC_18_2
        rC_18_2 = vA_18_7 * vB_7_2 + rC_18_2
        rC_18_2 = vA_18_8 * vB_8_2 + rC_18_2
        rC_18_2 = vA_18_9 * vB_9_2 + rC_18_2
        rC_18_2 = rC_18_2 * alpha
        rC_19_2 = 0.0
        rC_19_2 = vA_19_0 * vB_0_2 + rC_19_2
        rC_19_2 = vA_19_1 * vB_1_2 + rC_19_2
        rC_19_2 = vA_19_2 * vB_2_2 + rC_19_2
        rC_19_2 = vA_19_3 * vB_3_2 + rC_19_2
        rC_19_2 = vA_19_4 * vB_4_2 + rC_19_2
        rC_19_2 = vA_19_5 * vB_5_2 + rC_19_2
        rC_19_2 = vA_19_6 * vB_6_2 + rC_19_2
        rC_19_2 = vA_19_7 * vB_7_2 + rC_19_2
        rC_19_2 = vA_19_8 * vB_8_2 + rC_19_2
        rC_19_2 = vA_19_9 * vB_9_2 + rC_19_2
        rC_19_2 = rC_19_2 * alpha
        rC_0_3 = 0.0
        rC_0_3 = vA_0_0 * vB_0_3 + rC_0_3
        rC_0_3 = vA_0_1 * vB_1_3 + rC_0_3
        rC_0_3 = vA_0_2 * vB_2_3 + rC_0_3
        rC_0_3 = vA_0_3 * vB_3_3 + rC_0_3
        rC_0_3 = vA_0_4 * vB_4_3 + rC_0_3
        rC_0_3 = vA_0_5 * vB_5_3 + rC_0_3
        rC_0_3 = vA_0_6 * vB_6_3 + rC_0_3
        rC_0_3 = vA_0_7 * vB_7_3 + rC_0_3
        rC_0_3 = vA_0_8 * vB_8_3 + rC_0_3
        rC_0_3 = vA_0_9 * vB_9_3 + rC_0_3
        rC_0_3 = rC_0_3 * alpha
        rC_1_3 = 0.0
        rC_1_3 = vA_1_0 * vB_0_3 + rC_1_3
        rC_1_3 = vA_1_1 * vB_1_3 + rC_1_3
        rC_1_3 = vA_1_2 * vB_2_3 + rC_1_3
        rC_1_3 = vA_1_3 * vB_3_3 + rC_1_3
        rC_1_3 = vA_1_4 * vB_4_3 + rC_1_3
        rC_1_3 = vA_1_5 * vB_5_3 + rC_1_3
        rC_1_3 = vA_1_6 * vB_6_3 + rC_1_3
        rC_1_3 = vA_1_7 * vB_7_3 + rC_1_3
        rC_1_3 = vA_1_8 * vB_8_3 + rC_1_3
        rC_1_3 = vA_1_9 * vB_9_3 + rC_1_3
        rC_1_3 = rC_1_3 * alpha
        rC_2_3 = 0.0
        rC_2_3 = vA_2_0 * vB_0_3 + rC_2_3
        rC_2_3 = vA_2_1 * vB_1_3 + rC_2_3
        rC_2_3 = vA_2_2 * vB_2_3 + rC_2_3
        rC_2_3 = vA_2_3 * vB_3_3 + rC_2_3
        rC_2_3 = vA_2_4 * vB_4_3 + rC_2_3
        rC_2_3 = vA_2_5 * vB_5_3 + rC_2_3
        rC_2_3 = vA_2_6 * vB_6_3 + rC_2_3
        rC_2_3 = vA_2_7 * vB_7_3 + rC_2_3
        rC_2_3 = vA_2_8 * vB_8_3 + rC_2_3
        rC_2_3 = vA_2_9 * vB_9_3 + rC_2_3
        rC_2_3 = rC_2_3 * alpha
        rC_3_3 = 0.0
        rC_3_3 = vA_3_0 * vB_0_3 + rC_3_3
        rC_3_3 = vA_3_1 * vB_1_3 + rC_3_3
        rC_3_3 = vA_3_2 * vB_2_3 + rC_3_3
        rC_3_3 = vA_3_3 * vB_3_3 + rC_3_3
        rC_3_3 = vA_3_4 * vB_4_3 + rC_3_3
        rC_3_3 = vA_3_5 * vB_5_3 + rC_3_3
        rC_3_3 = vA_3_6 * vB_6_3 + rC_3_3
        rC_3_3 = vA_3_7 * vB_7_3 + rC_3_3
        rC_3_3 = vA_3_8 * vB_8_3 + rC_3_3
        rC_3_3 = vA_3_9 * vB_9_3 + rC_3_3
        rC_3_3 = rC_3_3 * alpha
        rC_4_3 = 0.0
        rC_4_3 = vA_4_0 * vB_0_3 + rC_4_3
        rC_4_3 = vA_4_1 * vB_1_3 + rC_4_3
        rC_4_3 = vA_4_2 * vB_2_3 + rC_4_3
        rC_4_3 = vA_4_3 * vB_3_3 + rC_4_3
        rC_4_3 = vA_4_4 * vB_4_3 + rC_4_3
        rC_4_3 = vA_4_5 * vB_5_3 + rC_4_3
        rC_4_3 = vA_4_6 * vB_6_3 + rC_4_3
        rC_4_3 = vA_4_7 * vB_7_3 + rC_4_3
        rC_4_3 = vA_4_8 * vB_8_3 + rC_4_3
        rC_4_3 = vA_4_9 * vB_9_3 + rC_4_3
        rC_4_3 = rC_4_3 * alpha
        rC_5_3 = 0.0
        rC_5_3 = vA_5_0 * vB_0_3 + rC_5_3
        rC_5_3 = vA_5_1 * vB_1_3 + rC_5_3
        rC_5_3 = vA_5_2 * vB_2_3 + rC_5_3
        rC_5_3 = vA_5_3 * vB_3_3 + rC_5_3
        rC_5_3 = vA_5_4 * vB_4_3 + rC_5_3
        rC_5_3 = vA_5_5 * vB_5_3 + rC_5_3
        rC_5_3 = vA_5_6 * vB_6_3 + rC_5_3
        rC_5_3 = vA_5_7 * vB_7_3 + rC_5_3
        rC_5_3 = vA_5_8 * vB_8_3 + rC_5_3
        rC_5_3 = vA_5_9 * vB_9_3 + rC_5_3
        rC_5_3 = rC_5_3 * alpha
        rC_6_3 = 0.0
        rC_6_3 = vA_6_0 * vB_0_3 + rC_6_3
        rC_6_3 = vA_6_1 * vB_1_3 + rC_6_3
        rC_6_3 = vA_6_2 * vB_2_3 + rC_6_3
        rC_6_3 = vA_6_3 * vB_3_3 + rC_6_3
        rC_6_3 = vA_6_4 * vB_4_3 + rC_6_3
        rC_6_3 = vA_6_5 * vB_5_3 + rC_6_3
        rC_6_3 = vA_6_6 * vB_6_3 + rC_6_3
        rC_6_3 = vA_6_7 * vB_7_3 + rC_6_3
        rC_6_3 = vA_6_8 * vB_8_3 + rC_6_3
        rC_6_3 = vA_6_9 * vB_9_3 + rC_6_3
        rC_6_3 = rC_6_3 * alpha
        rC_7_3 = 0.0
        rC_7_3 = vA_7_0 * vB_0_3 + rC_7_3
        rC_7_3 = vA_7_1 * vB_1_3 + rC_7_3
        rC_7_3 = vA_7_2 * vB_2_3 + rC_7_3
        rC_7_3 = vA_7_3 * vB_3_3 + rC_7_3
        rC_7_3 = vA_7_4 * vB_4_3 + rC_7_3
        rC_7_3 = vA_7_5 * vB_5_3 + rC_7_3
        rC_7_3 = vA_7_6 * vB_6_3 + rC_7_3
        rC_7_3 = vA_7_7 * vB_7_3 + rC_7_3
        rC_7_3 = vA_7_8 * vB_8_3 + rC_7_3
        rC_7_3 = vA_7_9 * vB_9_3 + rC_7_3
        rC_7_3 = rC_7_3 * alpha
        rC_8_3 = 0.0
        rC_8_3 = vA_8_0 * vB_0_3 + rC_8_3
        rC_8_3 = vA_8_1 * vB_1_3 + rC_8_3
        rC_8_3 = vA_8_2 * vB_2_3 + rC_8_3
        rC_8_3 = vA_8_3 * vB_3_3 + rC_8_3
        rC_8_3 = vA_8_4 * vB_4_3 + rC_8_3
        rC_8_3 = vA_8_5 * vB_5_3 + rC_8_3
        rC_8_3 = vA_8_6 * vB_6_3 + rC_8_3
        rC_8_3 = vA_8_7 * vB_7_3 + rC_8_3
        rC_8_3 = vA_8_8 * vB_8_3 + rC_8_3
        rC_8_3 = vA_8_9 * vB_9_3 + rC_8_3
        rC_8_3 = rC_8_3 * alpha
        rC_9_3 = 0.0
        rC_9_3 = vA_9_0 * vB_0_3 + rC_9_3
        rC_9_3 = vA_9_1 * vB_1_3 + rC_9_3
        rC_9_3 = vA_9_2 * vB_2_3 + rC_9_3
        rC_9_3 = vA_9_3 * vB_3_3 + rC_9_3
        rC_9_3 = vA_9_4 * vB_4_3 + rC_9_3
        rC_9_3 = vA_9_5 * vB_5_3 + rC_9_3
        rC_9_3 = vA_9_6 * vB_6_3 + rC_9_3
        rC_9_3 = vA_9_7 * vB_7_3 + rC_9_3
        rC_9_3 = vA_9_8 * vB_8_3 + rC_9_3
        rC_9_3 = vA_9_9 * vB_9_3 + rC_9_3
        rC_9_3 = rC_9_3 * alpha
        rC_10_3 = 0.0
        rC_10_3 = vA_10_0 * vB_0_3 + rC_10_3
        rC_10_3 = vA_10_1 * vB_1_3 + rC_10_3
        rC_10_3 = vA_10_2 * vB_2_3 + rC_10_3
        rC_10_3 = vA_10_3 * vB_3_3 + rC_10_3
        rC_10_3 = vA_10_4 * vB_4_3 + rC_10_3
        rC_10_3 = vA_10_5 * vB_5_3 + rC_10_3
        rC_10_3 = vA_10_6 * vB_6_3 + rC_10_3
        rC_10_3 = vA_10_7 * vB_7_3 + rC_10_3
        rC_10_3 = vA_10_8 * vB_8_3 + rC_10_3
        rC_10_3 = vA_10_9 * vB_9_3 + rC_10_3
        rC_10_3 = rC_10_3 * alpha
        rC_11_3 = 0.0
        rC_11_3 = vA_11_0 * vB_0_3 + rC_11_3
        rC_11_3 = vA_11_1 * vB_1_3 + rC_11_3
        rC_11_3 = vA_11_2 * vB_2_3 + rC_11_3
        rC_11_3 = vA_11_3 * vB_3_3 + rC_11_3
        rC_11_3 = vA_11_4 * vB_4_3 + rC_11_3
        rC_11_3 = vA_11_5 * vB_5_3 + rC_11_3
        rC_11_3 = vA_11_6 * vB_6_3 + rC_11_3
        rC_11_3 = vA_11_7 * vB_7_3 + rC_11_3
        rC_11_3 = vA_11_8 * vB_8_3 + rC_11_3
        rC_11_3 = vA_11_9 * vB_9_3 + rC_11_3
        rC_11_3 = rC_11_3 * alpha
        rC_12_3 = 0.0
        rC_12_3 = vA_12_0 * vB_0_3 + rC_12_3
        rC_12_3 = vA_12_1 * vB_1_3 + rC_12_3
        rC_12_3 = vA_12_2 * vB_2_3 + rC_12_3
        rC_12_3 = vA_12_3 * vB_3_3 + rC_12_3
        rC_12_3 = vA_12_4 * vB_4_3 + rC_12_3
        rC_12_3 = vA_12_5 * vB_5_3 + rC_12_3
        rC_12_3 = vA_12_6 * vB_6_3 + rC_12_3
        rC_12_3 = vA_12_7 * vB_7_3 + rC_12_3
        rC_12_3 = vA_12_8 * vB_8_3 + rC_12_3
        rC_12_3 = vA_12_9 * vB_9_3 + rC_12_3
        rC_12_3 = rC_12_3 * alpha
        rC_13_3 = 0.0
        rC_13_3 = vA_13_0 * vB_0_3 + rC_13_3
        rC_13_3 = vA_13_1 * vB_1_3 + rC_13_3
        rC_13_3 = vA_13_2 * vB_2_3 + rC_13_3
        rC_13_3 = vA_13_3 * vB_3_3 + rC_13_3
        rC_13_3 = vA_13_4 * vB_4_3 + rC_13_3
        rC_13_3 = vA_13_5 * vB_5_3 + rC_13_3
        rC_13_3 = vA_13_6 * vB_6_3 + rC_13_3
        rC_13_3 = vA_13_7 * vB_7_3 + rC_13_3
        rC_13_3 = vA_13_8 * vB_8_3 + rC_13_3
        rC_13_3 = vA_13_9 * vB_9_3 + rC_13_3
        rC_13_3 = rC_13_3 * alpha
        rC_14_3 = 0.0
        rC_14_3 = vA_14_0 * vB_0_3 + rC_14_3
        rC_14_3 = vA_14_1 * vB_1_3 + rC_14_3
        rC_14_3 = vA_14_2 * vB_2_3 + rC_14_3
        rC_14_3 = vA_14_3 * vB_3_3 + rC_14_3
        rC_14_3 = vA_14_4 * vB_4_3 + rC_14_3
        rC_14_3 = vA_14_5 * vB_5_3 + rC_14_3
        rC_14_3 = vA_14_6 * vB_6_3 + rC_14_3
        rC_14_3 = vA_14_7 * vB_7_3 + rC_14_3
        rC_14_3 = vA_14_8 * vB_8_3 + rC_14_3
        rC_14_3 = vA_14_9 * vB_9_3 + rC_14_3
        rC_14_3 = rC_14_3 * alpha
        rC_15_3 = 0.0
        rC_15_3 = vA_15_0 * vB_0_3 + rC_15_3
        rC_15_3 = vA_15_1 * vB_1_3 + rC_15_3
        rC_15_3 = vA_15_2 * vB_2_3 + rC_15_3
        rC_15_3 = vA_15_3 * vB_3_3 + rC_15_3
        rC_15_3 = vA_15_4 * vB_4_3 + rC_15_3
        rC_15_3 = vA_15_5 * vB_5_3 + rC_15_3
        rC_15_3 = vA_15_6 * vB_6_3 + rC_15_3
        rC_15_3 = vA_15_7 * vB_7_3 + rC_15_3
        rC_15_3 = vA_15_8 * vB_8_3 + rC_15_3
        rC_15_3 = vA_15_9 * vB_9_3 + rC_15_3
        rC_15_3 = rC_15_3 * alpha
        rC_16_3 = 0.0
        rC_16_3 = vA_16_0 * vB_0_3 + rC_16_3
        rC_16_3 = vA_16_1 * vB_1_3 + rC_16_3
        rC_16_3 = vA_16_2 * vB_2_3 + rC_16_3
        rC_16_3 = vA_16_3 * vB_3_3 + rC_16_3
        rC_16_3 = vA_16_4 * vB_4_3 + rC_16_3
        rC_16_3 = vA_16_5 * vB_5_3 + rC_16_3
        rC_16_3 = vA_16_6 * vB_6_3 + rC_16_3
        rC_16_3 = vA_16_7 * vB_7_3 + rC_16_3
        rC_16_3 = vA_16_8 * vB_8_3 + rC_16_3
        rC_16_3 = vA_16_9 * vB_9_3 + rC_16_3
        rC_16_3 = rC_16_3 * alpha
        rC_17_3 = 0.0
        rC_17_3 = vA_17_0 * vB_0_3 + rC_17_3
        rC_17_3 = vA_17_1 * vB_1_3 + rC_17_3
        rC_17_3 = vA_17_2 * vB_2_3 + rC_17_3
        rC_17_3 = vA_17_3 * vB_3_3 + rC_17_3
        rC_17_3 = vA_17_4 * vB_4_3 + rC_17_3
        rC_17_3 = vA_17_5 * vB_5_3 + rC_17_3
        rC_17_3 = vA_17_6 * vB_6_3 + rC_17_3
        rC_17_3 = vA_17_7 * vB_7_3 + rC_17_3
        rC_17_3 = vA_17_8 * vB_8_3 + rC_17_3
        rC_17_3 = vA_17_9 * vB_9_3 + rC_17_3
        rC_17_3 = rC_17_3 * alpha
        rC_18_3 = 0.0
        rC_18_3 = vA_18_0 * vB_0_3 + rC_18_3
        rC_18_3 = vA_18_1 * vB_1_3 + rC_18_3
        rC_18_3 = vA_18_2 * vB_2_3 + rC_18_3
        rC_18_3 = vA_18_3 * vB_3_3 + rC_18_3
        rC_18_3 = vA_18_4 * vB_4_3 + rC_18_3
        rC_18_3 = vA_18_5 * vB_5_3 + rC_18_3
        rC_18_3 = vA_18_6 * vB_6_3 + rC_18_3
        rC_18_3 = vA_18_7 * vB_7_3 + rC_18_3
        rC_18_3 = vA_18_8 * vB_8_3 + rC_18_3
        rC_18_3 = vA_18_9 * vB_9_3 + rC_18_3
        rC_18_3 = rC_18_3 * alpha
        rC_19_3 = 0.0
        rC_19_3 = vA_19_0 * vB_0_3 + rC_19_3
        rC_19_3 = vA_19_1 * vB_1_3 + rC_19_3
        rC_19_3 = vA_19_2 * vB_2_3 + rC_19_3
        rC_19_3 = vA_19_3 * vB_3_3 + rC_19_3
        rC_19_3 = vA_19_4 * vB_4_3 + rC_19_3
        rC_19_3 = vA_19_5 * vB_5_3 + rC_19_3
        rC_19_3 = vA_19_6 * vB_6_3 + rC_19_3
        rC_19_3 = vA_19_7 * vB_7_3 + rC_19_3
        rC_19_3 = vA_19_8 * vB_8_3 + rC_19_3
        rC_19_3 = vA_19_9 * vB_9_3 + rC_19_3
        rC_19_3 = rC_19_3 * alpha
        rC_0_4 = 0.0
        rC_0_4 = vA_0_0 * vB_0_4 + rC_0_4
        rC_0_4 = vA_0_1 * vB_1_4 + rC_0_4
        rC_0_4 = vA_0_2 * vB_2_4 + rC_0_4
        rC_0_4 = vA_0_3 * vB_3_4 + rC_0_4
        rC_0_4 = vA_0_4 * vB_4_4 + rC_0_4
        rC_0_4 = vA_0_5 * vB_5_4 + rC_0_4
        rC_0_4 = vA_0_6 * vB_6_4 + rC_0_4
        rC_0_4 = vA_0_7 * vB_7_4 + rC_0_4
        rC_0_4 = vA_0_8 * vB_8_4 + rC_0_4
        rC_0_4 = vA_0_9 * vB_9_4 + rC_0_4
        rC_0_4 = rC_0_4 * alpha
        rC_1_4 = 0.0
        rC_1_4 = vA_1_0 * vB_0_4 + rC_1_4
        rC_1_4 = vA_1_1 * vB_1_4 + rC_1_4
        rC_1_4 = vA_1_2 * vB_2_4 + rC_1_4
        rC_1_4 = vA_1_3 * vB_3_4 + rC_1_4
        rC_1_4 = vA_1_4 * vB_4_4 + rC_1_4
        rC_1_4 = vA_1_5 * vB_5_4 + rC_1_4
        rC_1_4 = vA_1_6 * vB_6_4 + rC_1_4
        rC_1_4 = vA_1_7 * vB_7_4 + rC_1_4
        rC_1_4 = vA_1_8 * vB_8_4 + rC_1_4
        rC_1_4 = vA_1_9 * vB_9_4 + rC_1_4
        rC_1_4 = rC_1_4 * alpha
        rC_2_4 = 0.0
        rC_2_4 = vA_2_0 * vB_0_4 + rC_2_4
        rC_2_4 = vA_2_1 * vB_1_4 + rC_2_4
        rC_2_4 = vA_2_2 * vB_2_4 + rC_2_4
        rC_2_4 = vA_2_3 * vB_3_4 + rC_2_4
        rC_2_4 = vA_2_4 * vB_4_4 + rC_2_4
        rC_2_4 = vA_2_5 * vB_5_4 + rC_2_4
        rC_2_4 = vA_2_6 * vB_6_4 + rC_2_4
        rC_2_4 = vA_2_7 * vB_7_4 + rC_2_4
        rC_2_4 = vA_2_8 * vB_8_4 + rC_2_4
        rC_2_4 = vA_2_9 * vB_9_4 + rC_2_4
        rC_2_4 = rC_2_4 * alpha
        rC_3_4 = 0.0
        rC_3_4 = vA_3_0 * vB_0_4 + rC_3_4
        rC_3_4 = vA_3_1 * vB_1_4 + rC_3_4
        rC_3_4 = vA_3_2 * vB_2_4 + rC_3_4
        rC_3_4 = vA_3_3 * vB_3_4 + rC_3_4
        rC_3_4 = vA_3_4 * vB_4_4 + rC_3_4
        rC_3_4 = vA_3_5 * vB_5_4 + rC_3_4
        rC_3_4 = vA_3_6 * vB_6_4 + rC_3_4
        rC_3_4 = vA_3_7 * vB_7_4 + rC_3_4
        rC_3_4 = vA_3_8 * vB_8_4 + rC_3_4
        rC_3_4 = vA_3_9 * vB_9_4 + rC_3_4
        rC_3_4 = rC_3_4 * alpha
        rC_4_4 = 0.0
        rC_4_4 = vA_4_0 * vB_0_4 + rC_4_4
        rC_4_4 = vA_4_1 * vB_1_4 + rC_4_4
        rC_4_4 = vA_4_2 * vB_2_4 + rC_4_4
        rC_4_4 = vA_4_3 * vB_3_4 + rC_4_4
        rC_4_4 = vA_4_4 * vB_4_4 + rC_4_4
        rC_4_4 = vA_4_5 * vB_5_4 + rC_4_4
        rC_4_4 = vA_4_6 * vB_6_4 + rC_4_4
        rC_4_4 = vA_4_7 * vB_7_4 + rC_4_4
        rC_4_4 = vA_4_8 * vB_8_4 + rC_4_4
        rC_4_4 = vA_4_9 * vB_9_4 + rC_4_4
        rC_4_4 = rC_4_4 * alpha
        rC_5_4 = 0.0
        rC_5_4 = vA_5_0 * vB_0_4 + rC_5_4
        rC_5_4 = vA_5_1 * vB_1_4 + rC_5_4
        rC_5_4 = vA_5_2 * vB_2_4 + rC_5_4
        rC_5_4 = vA_5_3 * vB_3_4 + rC_5_4
        rC_5_4 = vA_5_4 * vB_4_4 + rC_5_4
        rC_5_4 = vA_5_5 * vB_5_4 + rC_5_4
        rC_5_4 = vA_5_6 * vB_6_4 + rC_5_4
        rC_5_4 = vA_5_7 * vB_7_4 + rC_5_4
        rC_5_4 = vA_5_8 * vB_8_4 + rC_5_4
        rC_5_4 = vA_5_9 * vB_9_4 + rC_5_4
        rC_5_4 = rC_5_4 * alpha
        rC_6_4 = 0.0
        rC_6_4 = vA_6_0 * vB_0_4 + rC_6_4
        rC_6_4 = vA_6_1 * vB_1_4 + rC_6_4
        rC_6_4 = vA_6_2 * vB_2_4 + rC_6_4
        rC_6_4 = vA_6_3 * vB_3_4 + rC_6_4
        rC_6_4 = vA_6_4 * vB_4_4 + rC_6_4
        rC_6_4 = vA_6_5 * vB_5_4 + rC_6_4
        rC_6_4 = vA_6_6 * vB_6_4 + rC_6_4
        rC_6_4 = vA_6_7 * vB_7_4 + rC_6_4
        rC_6_4 = vA_6_8 * vB_8_4 + rC_6_4
        rC_6_4 = vA_6_9 * vB_9_4 + rC_6_4
        rC_6_4 = rC_6_4 * alpha
        rC_7_4 = 0.0
        rC_7_4 = vA_7_0 * vB_0_4 + rC_7_4
        rC_7_4 = vA_7_1 * vB_1_4 + rC_7_4
        rC_7_4 = vA_7_2 * vB_2_4 + rC_7_4
        rC_7_4 = vA_7_3 * vB_3_4 + rC_7_4
        rC_7_4 = vA_7_4 * vB_4_4 + rC_7_4
        rC_7_4 = vA_7_5 * vB_5_4 + rC_7_4
        rC_7_4 = vA_7_6 * vB_6_4 + rC_7_4
        rC_7_4 = vA_7_7 * vB_7_4 + rC_7_4
        rC_7_4 = vA_7_8 * vB_8_4 + rC_7_4
        rC_7_4 = vA_7_9 * vB_9_4 + rC_7_4
        rC_7_4 = rC_7_4 * alpha
        rC_8_4 = 0.0
        rC_8_4 = vA_8_0 * vB_0_4 + rC_8_4
        rC_8_4 = vA_8_1 * vB_1_4 + rC_8_4
        rC_8_4 = vA_8_2 * vB_2_4 + rC_8_4
        rC_8_4 = vA_8_3 * vB_3_4 + rC_8_4
        rC_8_4 = vA_8_4 * vB_4_4 + rC_8_4
        rC_8_4 = vA_8_5 * vB_5_4 + rC_8_4
        rC_8_4 = vA_8_6 * vB_6_4 + rC_8_4
        rC_8_4 = vA_8_7 * vB_7_4 + rC_8_4
        rC_8_4 = vA_8_8 * vB_8_4 + rC_8_4
        rC_8_4 = vA_8_9 * vB_9_4 + rC_8_4
        rC_8_4 = rC_8_4 * alpha
        rC_9_4 = 0.0
        rC_9_4 = vA_9_0 * vB_0_4 + rC_9_4
        rC_9_4 = vA_9_1 * vB_1_4 + rC_9_4
        rC_9_4 = vA_9_2 * vB_2_4 + rC_9_4
        rC_9_4 = vA_9_3 * vB_3_4 + rC_9_4
        rC_9_4 = vA_9_4 * vB_4_4 + rC_9_4
        rC_9_4 = vA_9_5 * vB_5_4 + rC_9_4
        rC_9_4 = vA_9_6 * vB_6_4 + rC_9_4
        rC_9_4 = vA_9_7 * vB_7_4 + rC_9_4
        rC_9_4 = vA_9_8 * vB_8_4 + rC_9_4
        rC_9_4 = vA_9_9 * vB_9_4 + rC_9_4
        rC_9_4 = rC_9_4 * alpha
        rC_10_4 = 0.0
        rC_10_4 = vA_10_0 * vB_0_4 + rC_10_4
        rC_10_4 = vA_10_1 * vB_1_4 + rC_10_4
        rC_10_4 = vA_10_2 * vB_2_4 + rC_10_4
        rC_10_4 = vA_10_3 * vB_3_4 + rC_10_4
        rC_10_4 = vA_10_4 * vB_4_4 + rC_10_4
        rC_10_4 = vA_10_5 * vB_5_4 + rC_10_4
        rC_10_4 = vA_10_6 * vB_6_4 + rC_10_4
        rC_10_4 = vA_10_7 * vB_7_4 + rC_10_4
        rC_10_4 = vA_10_8 * vB_8_4 + rC_10_4
        rC_10_4 = vA_10_9 * vB_9_4 + rC_10_4
        rC_10_4 = rC_10_4 * alpha
        rC_11_4 = 0.0
        rC_11_4 = vA_11_0 * vB_0_4 + rC_11_4
        rC_11_4 = vA_11_1 * vB_1_4 + rC_11_4
        rC_11_4 = vA_11_2 * vB_2_4 + rC_11_4
        rC_11_4 = vA_11_3 * vB_3_4 + rC_11_4
        rC_11_4 = vA_11_4 * vB_4_4 + rC_11_4
        rC_11_4 = vA_11_5 * vB_5_4 + rC_11_4
        rC_11_4 = vA_11_6 * vB_6_4 + rC_11_4
        rC_11_4 = vA_11_7 * vB_7_4 + rC_11_4
        rC_11_4 = vA_11_8 * vB_8_4 + rC_11_4
        rC_11_4 = vA_11_9 * vB_9_4 + rC_11_4
        rC_11_4 = rC_11_4 * alpha
        rC_12_4 = 0.0
        rC_12_4 = vA_12_0 * vB_0_4 + rC_12_4
        rC_12_4 = vA_12_1 * vB_1_4 + rC_12_4
        rC_12_4 = vA_12_2 * vB_2_4 + rC_12_4
        rC_12_4 = vA_12_3 * vB_3_4 + rC_12_4
        rC_12_4 = vA_12_4 * vB_4_4 + rC_12_4
        rC_12_4 = vA_12_5 * vB_5_4 + rC_12_4
        rC_12_4 = vA_12_6 * vB_6_4 + rC_12_4
        rC_12_4 = vA_12_7 * vB_7_4 + rC_12_4
        rC_12_4 = vA_12_8 * vB_8_4 + rC_12_4
        rC_12_4 = vA_12_9 * vB_9_4 + rC_12_4
        rC_12_4 = rC_12_4 * alpha
        rC_13_4 = 0.0
        rC_13_4 = vA_13_0 * vB_0_4 + rC_13_4
        rC_13_4 = vA_13_1 * vB_1_4 + rC_13_4
        rC_13_4 = vA_13_2 * vB_2_4 + rC_13_4
        rC_13_4 = vA_13_3 * vB_3_4 + rC_13_4
        rC_13_4 = vA_13_4 * vB_4_4 + rC_13_4
        rC_13_4 = vA_13_5 * vB_5_4 + rC_13_4
        rC_13_4 = vA_13_6 * vB_6_4 + rC_13_4
        rC_13_4 = vA_13_7 * vB_7_4 + rC_13_4
        rC_13_4 = vA_13_8 * vB_8_4 + rC_13_4
        rC_13_4 = vA_13_9 * vB_9_4 + rC_13_4
        rC_13_4 = rC_13_4 * alpha
        rC_14_4 = 0.0
        rC_14_4 = vA_14_0 * vB_0_4 + rC_14_4
        rC_14_4 = vA_14_1 * vB_1_4 + rC_14_4
        rC_14_4 = vA_14_2 * vB_2_4 + rC_14_4
        rC_14_4 = vA_14_3 * vB_3_4 + rC_14_4
        rC_14_4 = vA_14_4 * vB_4_4 + rC_14_4
        rC_14_4 = vA_14_5 * vB_5_4 + rC_14_4
        rC_14_4 = vA_14_6 * vB_6_4 + rC_14_4
        rC_14_4 = vA_14_7 * vB_7_4 + rC_14_4
        rC_14_4 = vA_14_8 * vB_8_4 + rC_14_4
        rC_14_4 = vA_14_9 * vB_9_4 + rC_14_4
        rC_14_4 = rC_14_4 * alpha
        rC_15_4 = 0.0
        rC_15_4 = vA_15_0 * vB_0_4 + rC_15_4
        rC_15_4 = vA_15_1 * vB_1_4 + rC_15_4
        rC_15_4 = vA_15_2 * vB_2_4 + rC_15_4
        rC_15_4 = vA_15_3 * vB_3_4 + rC_15_4
        rC_15_4 = vA_15_4 * vB_4_4 + rC_15_4
        rC_15_4 = vA_15_5 * vB_5_4 + rC_15_4
        rC_15_4 = vA_15_6 * vB_6_4 + rC_15_4
        rC_15_4 = vA_15_7 * vB_7_4 + rC_15_4
        rC_15_4 = vA_15_8 * vB_8_4 + rC_15_4
        rC_15_4 = vA_15_9 * vB_9_4 + rC_15_4
        rC_15_4 = rC_15_4 * alpha
        rC_16_4 = 0.0
        rC_16_4 = vA_16_0 * vB_0_4 + rC_16_4
        rC_16_4 = vA_16_1 * vB_1_4 + rC_16_4
        rC_16_4 = vA_16_2 * vB_2_4 + rC_16_4
        rC_16_4 = vA_16_3 * vB_3_4 + rC_16_4
        rC_16_4 = vA_16_4 * vB_4_4 + rC_16_4
        rC_16_4 = vA_16_5 * vB_5_4 + rC_16_4
        rC_16_4 = vA_16_6 * vB_6_4 + rC_16_4
        rC_16_4 = vA_16_7 * vB_7_4 + rC_16_4
        rC_16_4 = vA_16_8 * vB_8_4 + rC_16_4
        rC_16_4 = vA_16_9 * vB_9_4 + rC_16_4
        rC_16_4 = rC_16_4 * alpha
        rC_17_4 = 0.0
        rC_17_4 = vA_17_0 * vB_0_4 + rC_17_4
        rC_17_4 = vA_17_1 * vB_1_4 + rC_17_4
        rC_17_4 = vA_17_2 * vB_2_4 + rC_17_4
        rC_17_4 = vA_17_3 * vB_3_4 + rC_17_4
        rC_17_4 = vA_17_4 * vB_4_4 + rC_17_4
        rC_17_4 = vA_17_5 * vB_5_4 + rC_17_4
        rC_17_4 = vA_17_6 * vB_6_4 + rC_17_4
        rC_17_4 = vA_17_7 * vB_7_4 + rC_17_4
        rC_17_4 = vA_17_8 * vB_8_4 + rC_17_4
        rC_17_4 = vA_17_9 * vB_9_4 + rC_17_4
        rC_17_4 = rC_17_4 * alpha
        rC_18_4 = 0.0
        rC_18_4 = vA_18_0 * vB_0_4 + rC_18_4
        rC_18_4 = vA_18_1 * vB_1_4 + rC_18_4
        rC_18_4 = vA_18_2 * vB_2_4 + rC_18_4
        rC_18_4 = vA_18_3 * vB_3_4 + rC_18_4
        rC_18_4 = vA_18_4 * vB_4_4 + rC_18_4
        rC_18_4 = vA_18_5 * vB_5_4 + rC_18_4
        rC_18_4 = vA_18_6 * vB_6_4 + rC_18_4
        rC_18_4 = vA_18_7 * vB_7_4 + rC_18_4
        rC_18_4 = vA_18_8 * vB_8_4 + rC_18_4
        rC_18_4 = vA_18_9 * vB_9_4 + rC_18_4
        rC_18_4 = rC_18_4 * alpha
        rC_19_4 = 0.0
        rC_19_4 = vA_19_0 * vB_0_4 + rC_19_4
        rC_19_4 = vA_19_1 * vB_1_4 + rC_19_4
        rC_19_4 = vA_19_2 * vB_2_4 + rC_19_4
        rC_19_4 = vA_19_3 * vB_3_4 + rC_19_4
        rC_19_4 = vA_19_4 * vB_4_4 + rC_19_4
        rC_19_4 = vA_19_5 * vB_5_4 + rC_19_4
        rC_19_4 = vA_19_6 * vB_6_4 + rC_19_4
        rC_19_4 = vA_19_7 * vB_7_4 + rC_19_4
        rC_19_4 = vA_19_8 * vB_8_4 + rC_19_4
        rC_19_4 = vA_19_9 * vB_9_4 + rC_19_4
        rC_19_4 = rC_19_4 * alpha
        rC_0_5 = 0.0
        rC_0_5 = vA_0_0 * vB_0_5 + rC_0_5
        rC_0_5 = vA_0_1 * vB_1_5 + rC_0_5
        rC_0_5 = vA_0_2 * vB_2_5 + rC_0_5
        rC_0_5 = vA_0_3 * vB_3_5 + rC_0_5
        rC_0_5 = vA_0_4 * vB_4_5 + rC_0_5
        rC_0_5 = vA_0_5 * vB_5_5 + rC_0_5
        rC_0_5 = vA_0_6 * vB_6_5 + rC_0_5
        rC_0_5 = vA_0_7 * vB_7_5 + rC_0_5
        rC_0_5 = vA_0_8 * vB_8_5 + rC_0_5
        rC_0_5 = vA_0_9 * vB_9_5 + rC_0_5
        rC_0_5 = rC_0_5 * alpha
        rC_1_5 = 0.0
        rC_1_5 = vA_1_0 * vB_0_5 + rC_1_5
        rC_1_5 = vA_1_1 * vB_1_5 + rC_1_5
        rC_1_5 = vA_1_2 * vB_2_5 + rC_1_5
        rC_1_5 = vA_1_3 * vB_3_5 + rC_1_5
        rC_1_5 = vA_1_4 * vB_4_5 + rC_1_5
        rC_1_5 = vA_1_5 * vB_5_5 + rC_1_5
        rC_1_5 = vA_1_6 * vB_6_5 + rC_1_5
        rC_1_5 = vA_1_7 * vB_7_5 + rC_1_5
        rC_1_5 = vA_1_8 * vB_8_5 + rC_1_5
        rC_1_5 = vA_1_9 * vB_9_5 + rC_1_5
        rC_1_5 = rC_1_5 * alpha
        rC_2_5 = 0.0
        rC_2_5 = vA_2_0 * vB_0_5 + rC_2_5
        rC_2_5 = vA_2_1 * vB_1_5 + rC_2_5
        rC_2_5 = vA_2_2 * vB_2_5 + rC_2_5
        rC_2_5 = vA_2_3 * vB_3_5 + rC_2_5
        rC_2_5 = vA_2_4 * vB_4_5 + rC_2_5
        rC_2_5 = vA_2_5 * vB_5_5 + rC_2_5
        rC_2_5 = vA_2_6 * vB_6_5 + rC_2_5
        rC_2_5 = vA_2_7 * vB_7_5 + rC_2_5
        rC_2_5 = vA_2_8 * vB_8_5 + rC_2_5
        rC_2_5 = vA_2_9 * vB_9_5 + rC_2_5
        rC_2_5 = rC_2_5 * alpha
        rC_3_5 = 0.0
        rC_3_5 = vA_3_0 * vB_0_5 + rC_3_5
        rC_3_5 = vA_3_1 * vB_1_5 + rC_3_5
        rC_3_5 = vA_3_2 * vB_2_5 + rC_3_5
        rC_3_5 = vA_3_3 * vB_3_5 + rC_3_5
        rC_3_5 = vA_3_4 * vB_4_5 + rC_3_5
        rC_3_5 = vA_3_5 * vB_5_5 + rC_3_5
        rC_3_5 = vA_3_6 * vB_6_5 + rC_3_5
        rC_3_5 = vA_3_7 * vB_7_5 + rC_3_5
        rC_3_5 = vA_3_8 * vB_8_5 + rC_3_5
        rC_3_5 = vA_3_9 * vB_9_5 + rC_3_5
        rC_3_5 = rC_3_5 * alpha
        rC_4_5 = 0.0
        rC_4_5 = vA_4_0 * vB_0_5 + rC_4_5
        rC_4_5 = vA_4_1 * vB_1_5 + rC_4_5
        rC_4_5 = vA_4_2 * vB_2_5 + rC_4_5
        rC_4_5 = vA_4_3 * vB_3_5 + rC_4_5
        rC_4_5 = vA_4_4 * vB_4_5 + rC_4_5
        rC_4_5 = vA_4_5 * vB_5_5 + rC_4_5
        rC_4_5 = vA_4_6 * vB_6_5 + rC_4_5
        rC_4_5 = vA_4_7 * vB_7_5 + rC_4_5
        rC_4_5 = vA_4_8 * vB_8_5 + rC_4_5
        rC_4_5 = vA_4_9 * vB_9_5 + rC_4_5
        rC_4_5 = rC_4_5 * alpha
        rC_5_5 = 0.0
        rC_5_5 = vA_5_0 * vB_0_5 + rC_5_5
        rC_5_5 = vA_5_1 * vB_1_5 + rC_5_5
        rC_5_5 = vA_5_2 * vB_2_5 + rC_5_5
        rC_5_5 = vA_5_3 * vB_3_5 + rC_5_5
        rC_5_5 = vA_5_4 * vB_4_5 + rC_5_5
        rC_5_5 = vA_5_5 * vB_5_5 + rC_5_5
        rC_5_5 = vA_5_6 * vB_6_5 + rC_5_5
        rC_5_5 = vA_5_7 * vB_7_5 + rC_5_5
        rC_5_5 = vA_5_8 * vB_8_5 + rC_5_5
        rC_5_5 = vA_5_9 * vB_9_5 + rC_5_5
        rC_5_5 = rC_5_5 * alpha
        rC_6_5 = 0.0
        rC_6_5 = vA_6_0 * vB_0_5 + rC_6_5
        rC_6_5 = vA_6_1 * vB_1_5 + rC_6_5
        rC_6_5 = vA_6_2 * vB_2_5 + rC_6_5
        rC_6_5 = vA_6_3 * vB_3_5 + rC_6_5
        rC_6_5 = vA_6_4 * vB_4_5 + rC_6_5
        rC_6_5 = vA_6_5 * vB_5_5 + rC_6_5
        rC_6_5 = vA_6_6 * vB_6_5 + rC_6_5
        rC_6_5 = vA_6_7 * vB_7_5 + rC_6_5
        rC_6_5 = vA_6_8 * vB_8_5 + rC_6_5
        rC_6_5 = vA_6_9 * vB_9_5 + rC_6_5
        rC_6_5 = rC_6_5 * alpha
        rC_7_5 = 0.0
        rC_7_5 = vA_7_0 * vB_0_5 + rC_7_5
        rC_7_5 = vA_7_1 * vB_1_5 + rC_7_5
        rC_7_5 = vA_7_2 * vB_2_5 + rC_7_5
        rC_7_5 = vA_7_3 * vB_3_5 + rC_7_5
        rC_7_5 = vA_7_4 * vB_4_5 + rC_7_5
        rC_7_5 = vA_7_5 * vB_5_5 + rC_7_5
        rC_7_5 = vA_7_6 * vB_6_5 + rC_7_5
        rC_7_5 = vA_7_7 * vB_7_5 + rC_7_5
        rC_7_5 = vA_7_8 * vB_8_5 + rC_7_5
        rC_7_5 = vA_7_9 * vB_9_5 + rC_7_5
        rC_7_5 = rC_7_5 * alpha
        rC_8_5 = 0.0
        rC_8_5 = vA_8_0 * vB_0_5 + rC_8_5
        rC_8_5 = vA_8_1 * vB_1_5 + rC_8_5
        rC_8_5 = vA_8_2 * vB_2_5 + rC_8_5
        rC_8_5 = vA_8_3 * vB_3_5 + rC_8_5
        rC_8_5 = vA_8_4 * vB_4_5 + rC_8_5
        rC_8_5 = vA_8_5 * vB_5_5 + rC_8_5
        rC_8_5 = vA_8_6 * vB_6_5 + rC_8_5
        rC_8_5 = vA_8_7 * vB_7_5 + rC_8_5
        rC_8_5 = vA_8_8 * vB_8_5 + rC_8_5
        rC_8_5 = vA_8_9 * vB_9_5 + rC_8_5
        rC_8_5 = rC_8_5 * alpha
        rC_9_5 = 0.0
        rC_9_5 = vA_9_0 * vB_0_5 + rC_9_5
        rC_9_5 = vA_9_1 * vB_1_5 + rC_9_5
        rC_9_5 = vA_9_2 * vB_2_5 + rC_9_5
        rC_9_5 = vA_9_3 * vB_3_5 + rC_9_5
        rC_9_5 = vA_9_4 * vB_4_5 + rC_9_5
        rC_9_5 = vA_9_5 * vB_5_5 + rC_9_5
        rC_9_5 = vA_9_6 * vB_6_5 + rC_9_5
        rC_9_5 = vA_9_7 * vB_7_5 + rC_9_5
        rC_9_5 = vA_9_8 * vB_8_5 + rC_9_5
        rC_9_5 = vA_9_9 * vB_9_5 + rC_9_5
        rC_9_5 = rC_9_5 * alpha
        rC_10_5 = 0.0
        rC_10_5 = vA_10_0 * vB_0_5 + rC_10_5
        rC_10_5 = vA_10_1 * vB_1_5 + rC_10_5
        rC_10_5 = vA_10_2 * vB_2_5 + rC_10_5
        rC_10_5 = vA_10_3 * vB_3_5 + rC_10_5
        rC_10_5 = vA_10_4 * vB_4_5 + rC_10_5
        rC_10_5 = vA_10_5 * vB_5_5 + rC_10_5
        rC_10_5 = vA_10_6 * vB_6_5 + rC_10_5
        rC_10_5 = vA_10_7 * vB_7_5 + rC_10_5
        rC_10_5 = vA_10_8 * vB_8_5 + rC_10_5
        rC_10_5 = vA_10_9 * vB_9_5 + rC_10_5
        rC_10_5 = rC_10_5 * alpha
        rC_11_5 = 0.0
        rC_11_5 = vA_11_0 * vB_0_5 + rC_11_5
        rC_11_5 = vA_11_1 * vB_1_5 + rC_11_5
        rC_11_5 = vA_11_2 * vB_2_5 + rC_11_5
        rC_11_5 = vA_11_3 * vB_3_5 + rC_11_5
        rC_11_5 = vA_11_4 * vB_4_5 + rC_11_5
        rC_11_5 = vA_11_5 * vB_5_5 + rC_11_5
        rC_11_5 = vA_11_6 * vB_6_5 + rC_11_5
        rC_11_5 = vA_11_7 * vB_7_5 + rC_11_5
        rC_11_5 = vA_11_8 * vB_8_5 + rC_11_5
        rC_11_5 = vA_11_9 * vB_9_5 + rC_11_5
        rC_11_5 = rC_11_5 * alpha
        rC_12_5 = 0.0
        rC_12_5 = vA_12_0 * vB_0_5 + rC_12_5
        rC_12_5 = vA_12_1 * vB_1_5 + rC_12_5
        rC_12_5 = vA_12_2 * vB_2_5 + rC_12_5
        rC_12_5 = vA_12_3 * vB_3_5 + rC_12_5
        rC_12_5 = vA_12_4 * vB_4_5 + rC_12_5
        rC_12_5 = vA_12_5 * vB_5_5 + rC_12_5
        rC_12_5 = vA_12_6 * vB_6_5 + rC_12_5
        rC_12_5 = vA_12_7 * vB_7_5 + rC_12_5
        rC_12_5 = vA_12_8 * vB_8_5 + rC_12_5
        rC_12_5 = vA_12_9 * vB_9_5 + rC_12_5
        rC_12_5 = rC_12_5 * alpha
        rC_13_5 = 0.0
        rC_13_5 = vA_13_0 * vB_0_5 + rC_13_5
        rC_13_5 = vA_13_1 * vB_1_5 + rC_13_5
        rC_13_5 = vA_13_2 * vB_2_5 + rC_13_5
        rC_13_5 = vA_13_3 * vB_3_5 + rC_13_5
        rC_13_5 = vA_13_4 * vB_4_5 + rC_13_5
        rC_13_5 = vA_13_5 * vB_5_5 + rC_13_5
        rC_13_5 = vA_13_6 * vB_6_5 + rC_13_5
        rC_13_5 = vA_13_7 * vB_7_5 + rC_13_5
        rC_13_5 = vA_13_8 * vB_8_5 + rC_13_5
        rC_13_5 = vA_13_9 * vB_9_5 + rC_13_5
        rC_13_5 = rC_13_5 * alpha
        rC_14_5 = 0.0
        rC_14_5 = vA_14_0 * vB_0_5 + rC_14_5
        rC_14_5 = vA_14_1 * vB_1_5 + rC_14_5
        rC_14_5 = vA_14_2 * vB_2_5 + rC_14_5
        rC_14_5 = vA_14_3 * vB_3_5 + rC_14_5
        rC_14_5 = vA_14_4 * vB_4_5 + rC_14_5
        rC_14_5 = vA_14_5 * vB_5_5 + rC_14_5
        rC_14_5 = vA_14_6 * vB_6_5 + rC_14_5
        rC_14_5 = vA_14_7 * vB_7_5 + rC_14_5
        rC_14_5 = vA_14_8 * vB_8_5 + rC_14_5
        rC_14_5 = vA_14_9 * vB_9_5 + rC_14_5
        rC_14_5 = rC_14_5 * alpha
        rC_15_5 = 0.0
        rC_15_5 = vA_15_0 * vB_0_5 + rC_15_5
        rC_15_5 = vA_15_1 * vB_1_5 + rC_15_5
        rC_15_5 = vA_15_2 * vB_2_5 + rC_15_5
        rC_15_5 = vA_15_3 * vB_3_5 + rC_15_5
        rC_15_5 = vA_15_4 * vB_4_5 + rC_15_5
        rC_15_5 = vA_15_5 * vB_5_5 + rC_15_5
        rC_15_5 = vA_15_6 * vB_6_5 + rC_15_5
        rC_15_5 = vA_15_7 * vB_7_5 + rC_15_5
        rC_15_5 = vA_15_8 * vB_8_5 + rC_15_5
        rC_15_5 = vA_15_9 * vB_9_5 + rC_15_5
        rC_15_5 = rC_15_5 * alpha
        rC_16_5 = 0.0
        rC_16_5 = vA_16_0 * vB_0_5 + rC_16_5
        rC_16_5 = vA_16_1 * vB_1_5 + rC_16_5
        rC_16_5 = vA_16_2 * vB_2_5 + rC_16_5
        rC_16_5 = vA_16_3 * vB_3_5 + rC_16_5
        rC_16_5 = vA_16_4 * vB_4_5 + rC_16_5
        rC_16_5 = vA_16_5 * vB_5_5 + rC_16_5
        rC_16_5 = vA_16_6 * vB_6_5 + rC_16_5
        rC_16_5 = vA_16_7 * vB_7_5 + rC_16_5
        rC_16_5 = vA_16_8 * vB_8_5 + rC_16_5
        rC_16_5 = vA_16_9 * vB_9_5 + rC_16_5
        rC_16_5 = rC_16_5 * alpha
        rC_17_5 = 0.0
        rC_17_5 = vA_17_0 * vB_0_5 + rC_17_5
        rC_17_5 = vA_17_1 * vB_1_5 + rC_17_5
        rC_17_5 = vA_17_2 * vB_2_5 + rC_17_5
        rC_17_5 = vA_17_3 * vB_3_5 + rC_17_5
        rC_17_5 = vA_17_4 * vB_4_5 + rC_17_5
        rC_17_5 = vA_17_5 * vB_5_5 + rC_17_5
        rC_17_5 = vA_17_6 * vB_6_5 + rC_17_5
        rC_17_5 = vA_17_7 * vB_7_5 + rC_17_5
        rC_17_5 = vA_17_8 * vB_8_5 + rC_17_5
        rC_17_5 = vA_17_9 * vB_9_5 + rC_17_5
        rC_17_5 = rC_17_5 * alpha
        rC_18_5 = 0.0
        rC_18_5 = vA_18_0 * vB_0_5 + rC_18_5
        rC_18_5 = vA_18_1 * vB_1_5 + rC_18_5
        rC_18_5 = vA_18_2 * vB_2_5 + rC_18_5
        rC_18_5 = vA_18_3 * vB_3_5 + rC_18_5
        rC_18_5 = vA_18_4 * vB_4_5 + rC_18_5
        rC_18_5 = vA_18_5 * vB_5_5 + rC_18_5
        rC_18_5 = vA_18_6 * vB_6_5 + rC_18_5
        rC_18_5 = vA_18_7 * vB_7_5 + rC_18_5
        rC_18_5 = vA_18_8 * vB_8_5 + rC_18_5
        rC_18_5 = vA_18_9 * vB_9_5 + rC_18_5
        rC_18_5 = rC_18_5 * alpha
        rC_19_5 = 0.0
        rC_19_5 = vA_19_0 * vB_0_5 + rC_19_5
        rC_19_5 = vA_19_1 * vB_1_5 + rC_19_5
        rC_19_5 = vA_19_2 * vB_2_5 + rC_19_5
        rC_19_5 = vA_19_3 * vB_3_5 + rC_19_5
        rC_19_5 = vA_19_4 * vB_4_5 + rC_19_5
        rC_19_5 = vA_19_5 * vB_5_5 + rC_19_5
        rC_19_5 = vA_19_6 * vB_6_5 + rC_19_5
        rC_19_5 = vA_19_7 * vB_7_5 + rC_19_5
        rC_19_5 = vA_19_8 * vB_8_5 + rC_19_5
        rC_19_5 = vA_19_9 * vB_9_5 + rC_19_5
        rC_19_5 = rC_19_5 * alpha
        rC_0_6 = 0.0
        rC_0_6 = vA_0_0 * vB_0_6 + rC_0_6
        rC_0_6 = vA_0_1 * vB_1_6 + rC_0_6
        rC_0_6 = vA_0_2 * vB_2_6 + rC_0_6
        rC_0_6 = vA_0_3 * vB_3_6 + rC_0_6
        rC_0_6 = vA_0_4 * vB_4_6 + rC_0_6
        rC_0_6 = vA_0_5 * vB_5_6 + rC_0_6
        rC_0_6 = vA_0_6 * vB_6_6 + rC_0_6
        rC_0_6 = vA_0_7 * vB_7_6 + rC_0_6
        rC_0_6 = vA_0_8 * vB_8_6 + rC_0_6
        rC_0_6 = vA_0_9 * vB_9_6 + rC_0_6
        rC_0_6 = rC_0_6 * alpha
        rC_1_6 = 0.0
        rC_1_6 = vA_1_0 * vB_0_6 + rC_1_6
        rC_1_6 = vA_1_1 * vB_1_6 + rC_1_6
        rC_1_6 = vA_1_2 * vB_2_6 + rC_1_6
        rC_1_6 = vA_1_3 * vB_3_6 + rC_1_6
        rC_1_6 = vA_1_4 * vB_4_6 + rC_1_6
        rC_1_6 = vA_1_5 * vB_5_6 + rC_1_6
        rC_1_6 = vA_1_6 * vB_6_6 + rC_1_6
        rC_1_6 = vA_1_7 * vB_7_6 + rC_1_6
        rC_1_6 = vA_1_8 * vB_8_6 + rC_1_6
        rC_1_6 = vA_1_9 * vB_9_6 + rC_1_6
        rC_1_6 = rC_1_6 * alpha
        rC_2_6 = 0.0
        rC_2_6 = vA_2_0 * vB_0_6 + rC_2_6
        rC_2_6 = vA_2_1 * vB_1_6 + rC_2_6
        rC_2_6 = vA_2_2 * vB_2_6 + rC_2_6
        rC_2_6 = vA_2_3 * vB_3_6 + rC_2_6
        rC_2_6 = vA_2_4 * vB_4_6 + rC_2_6
        rC_2_6 = vA_2_5 * vB_5_6 + rC_2_6
        rC_2_6 = vA_2_6 * vB_6_6 + rC_2_6
        rC_2_6 = vA_2_7 * vB_7_6 + rC_2_6
        rC_2_6 = vA_2_8 * vB_8_6 + rC_2_6
        rC_2_6 = vA_2_9 * vB_9_6 + rC_2_6
        rC_2_6 = rC_2_6 * alpha
        rC_3_6 = 0.0
        rC_3_6 = vA_3_0 * vB_0_6 + rC_3_6
        rC_3_6 = vA_3_1 * vB_1_6 + rC_3_6
        rC_3_6 = vA_3_2 * vB_2_6 + rC_3_6
        rC_3_6 = vA_3_3 * vB_3_6 + rC_3_6
        rC_3_6 = vA_3_4 * vB_4_6 + rC_3_6
        rC_3_6 = vA_3_5 * vB_5_6 + rC_3_6
        rC_3_6 = vA_3_6 * vB_6_6 + rC_3_6
        rC_3_6 = vA_3_7 * vB_7_6 + rC_3_6
        rC_3_6 = vA_3_8 * vB_8_6 + rC_3_6
        rC_3_6 = vA_3_9 * vB_9_6 + rC_3_6
        rC_3_6 = rC_3_6 * alpha
        rC_4_6 = 0.0
        rC_4_6 = vA_4_0 * vB_0_6 + rC_4_6
        rC_4_6 = vA_4_1 * vB_1_6 + rC_4_6
        rC_4_6 = vA_4_2 * vB_2_6 + rC_4_6
        rC_4_6 = vA_4_3 * vB_3_6 + rC_4_6
        rC_4_6 = vA_4_4 * vB_4_6 + rC_4_6
        rC_4_6 = vA_4_5 * vB_5_6 + rC_4_6
        rC_4_6 = vA_4_6 * vB_6_6 + rC_4_6
        rC_4_6 = vA_4_7 * vB_7_6 + rC_4_6
        rC_4_6 = vA_4_8 * vB_8_6 + rC_4_6
        rC_4_6 = vA_4_9 * vB_9_6 + rC_4_6
        rC_4_6 = rC_4_6 * alpha
        rC_5_6 = 0.0
        rC_5_6 = vA_5_0 * vB_0_6 + rC_5_6
        rC_5_6 = vA_5_1 * vB_1_6 + rC_5_6
        rC_5_6 = vA_5_2 * vB_2_6 + rC_5_6
        rC_5_6 = vA_5_3 * vB_3_6 + rC_5_6
        rC_5_6 = vA_5_4 * vB_4_6 + rC_5_6
        rC_5_6 = vA_5_5 * vB_5_6 + rC_5_6
        rC_5_6 = vA_5_6 * vB_6_6 + rC_5_6
        rC_5_6 = vA_5_7 * vB_7_6 + rC_5_6
        rC_5_6 = vA_5_8 * vB_8_6 + rC_5_6
        rC_5_6 = vA_5_9 * vB_9_6 + rC_5_6
        rC_5_6 = rC_5_6 * alpha
        rC_6_6 = 0.0
        rC_6_6 = vA_6_0 * vB_0_6 + rC_6_6
        rC_6_6 = vA_6_1 * vB_1_6 + rC_6_6
        rC_6_6 = vA_6_2 * vB_2_6 + rC_6_6
        rC_6_6 = vA_6_3 * vB_3_6 + rC_6_6
        rC_6_6 = vA_6_4 * vB_4_6 + rC_6_6
        rC_6_6 = vA_6_5 * vB_5_6 + rC_6_6
        rC_6_6 = vA_6_6 * vB_6_6 + rC_6_6
        rC_6_6 = vA_6_7 * vB_7_6 + rC_6_6
        rC_6_6 = vA_6_8 * vB_8_6 + rC_6_6
        rC_6_6 = vA_6_9 * vB_9_6 + rC_6_6
        rC_6_6 = rC_6_6 * alpha
        rC_7_6 = 0.0
        rC_7_6 = vA_7_0 * vB_0_6 + rC_7_6
        rC_7_6 = vA_7_1 * vB_1_6 + rC_7_6
        rC_7_6 = vA_7_2 * vB_2_6 + rC_7_6
        rC_7_6 = vA_7_3 * vB_3_6 + rC_7_6
        rC_7_6 = vA_7_4 * vB_4_6 + rC_7_6
        rC_7_6 = vA_7_5 * vB_5_6 + rC_7_6
        rC_7_6 = vA_7_6 * vB_6_6 + rC_7_6
        rC_7_6 = vA_7_7 * vB_7_6 + rC_7_6
        rC_7_6 = vA_7_8 * vB_8_6 + rC_7_6
        rC_7_6 = vA_7_9 * vB_9_6 + rC_7_6
        rC_7_6 = rC_7_6 * alpha
        rC_8_6 = 0.0
        rC_8_6 = vA_8_0 * vB_0_6 + rC_8_6
        rC_8_6 = vA_8_1 * vB_1_6 + rC_8_6
        rC_8_6 = vA_8_2 * vB_2_6 + rC_8_6
        rC_8_6 = vA_8_3 * vB_3_6 + rC_8_6
        rC_8_6 = vA_8_4 * vB_4_6 + rC_8_6
        rC_8_6 = vA_8_5 * vB_5_6 + rC_8_6
        rC_8_6 = vA_8_6 * vB_6_6 + rC_8_6
        rC_8_6 = vA_8_7 * vB_7_6 + rC_8_6
        rC_8_6 = vA_8_8 * vB_8_6 + rC_8_6
        rC_8_6 = vA_8_9 * vB_9_6 + rC_8_6
        rC_8_6 = rC_8_6 * alpha
        rC_9_6 = 0.0
        rC_9_6 = vA_9_0 * vB_0_6 + rC_9_6
        rC_9_6 = vA_9_1 * vB_1_6 + rC_9_6
        rC_9_6 = vA_9_2 * vB_2_6 + rC_9_6
        rC_9_6 = vA_9_3 * vB_3_6 + rC_9_6
        rC_9_6 = vA_9_4 * vB_4_6 + rC_9_6
        rC_9_6 = vA_9_5 * vB_5_6 + rC_9_6
        rC_9_6 = vA_9_6 * vB_6_6 + rC_9_6
        rC_9_6 = vA_9_7 * vB_7_6 + rC_9_6
        rC_9_6 = vA_9_8 * vB_8_6 + rC_9_6
        rC_9_6 = vA_9_9 * vB_9_6 + rC_9_6
        rC_9_6 = rC_9_6 * alpha
        rC_10_6 = 0.0
        rC_10_6 = vA_10_0 * vB_0_6 + rC_10_6
        rC_10_6 = vA_10_1 * vB_1_6 + rC_10_6
        rC_10_6 = vA_10_2 * vB_2_6 + rC_10_6
        rC_10_6 = vA_10_3 * vB_3_6 + rC_10_6
        rC_10_6 = vA_10_4 * vB_4_6 + rC_10_6
        rC_10_6 = vA_10_5 * vB_5_6 + rC_10_6
        rC_10_6 = vA_10_6 * vB_6_6 + rC_10_6
        rC_10_6 = vA_10_7 * vB_7_6 + rC_10_6
        rC_10_6 = vA_10_8 * vB_8_6 + rC_10_6
        rC_10_6 = vA_10_9 * vB_9_6 + rC_10_6
        rC_10_6 = rC_10_6 * alpha
        rC_11_6 = 0.0
        rC_11_6 = vA_11_0 * vB_0_6 + rC_11_6
        rC_11_6 = vA_11_1 * vB_1_6 + rC_11_6
        rC_11_6 = vA_11_2 * vB_2_6 + rC_11_6
        rC_11_6 = vA_11_3 * vB_3_6 + rC_11_6
        rC_11_6 = vA_11_4 * vB_4_6 + rC_11_6
        rC_11_6 = vA_11_5 * vB_5_6 + rC_11_6
        rC_11_6 = vA_11_6 * vB_6_6 + rC_11_6
        rC_11_6 = vA_11_7 * vB_7_6 + rC_11_6
        rC_11_6 = vA_11_8 * vB_8_6 + rC_11_6
        rC_11_6 = vA_11_9 * vB_9_6 + rC_11_6
        rC_11_6 = rC_11_6 * alpha
        rC_12_6 = 0.0
        rC_12_6 = vA_12_0 * vB_0_6 + rC_12_6
        rC_12_6 = vA_12_1 * vB_1_6 + rC_12_6
        rC_12_6 = vA_12_2 * vB_2_6 + rC_12_6
        rC_12_6 = vA_12_3 * vB_3_6 + rC_12_6
        rC_12_6 = vA_12_4 * vB_4_6 + rC_12_6
        rC_12_6 = vA_12_5 * vB_5_6 + rC_12_6
        rC_12_6 = vA_12_6 * vB_6_6 + rC_12_6
        rC_12_6 = vA_12_7 * vB_7_6 + rC_12_6
        rC_12_6 = vA_12_8 * vB_8_6 + rC_12_6
        rC_12_6 = vA_12_9 * vB_9_6 + rC_12_6
        rC_12_6 = rC_12_6 * alpha
        rC_13_6 = 0.0
        rC_13_6 = vA_13_0 * vB_0_6 + rC_13_6
        rC_13_6 = vA_13_1 * vB_1_6 + rC_13_6
        rC_13_6 = vA_13_2 * vB_2_6 + rC_13_6
        rC_13_6 = vA_13_3 * vB_3_6 + rC_13_6
        rC_13_6 = vA_13_4 * vB_4_6 + rC_13_6
        rC_13_6 = vA_13_5 * vB_5_6 + rC_13_6
        rC_13_6 = vA_13_6 * vB_6_6 + rC_13_6
        rC_13_6 = vA_13_7 * vB_7_6 + rC_13_6
        rC_13_6 = vA_13_8 * vB_8_6 + rC_13_6
        rC_13_6 = vA_13_9 * vB_9_6 + rC_13_6
        rC_13_6 = rC_13_6 * alpha
        rC_14_6 = 0.0
        rC_14_6 = vA_14_0 * vB_0_6 + rC_14_6
        rC_14_6 = vA_14_1 * vB_1_6 + rC_14_6
        rC_14_6 = vA_14_2 * vB_2_6 + rC_14_6
        rC_14_6 = vA_14_3 * vB_3_6 + rC_14_6
        rC_14_6 = vA_14_4 * vB_4_6 + rC_14_6
        rC_14_6 = vA_14_5 * vB_5_6 + rC_14_6
        rC_14_6 = vA_14_6 * vB_6_6 + rC_14_6
        rC_14_6 = vA_14_7 * vB_7_6 + rC_14_6
        rC_14_6 = vA_14_8 * vB_8_6 + rC_14_6
        rC_14_6 = vA_14_9 * vB_9_6 + rC_14_6
        rC_14_6 = rC_14_6 * alpha
        rC_15_6 = 0.0
        rC_15_6 = vA_15_0 * vB_0_6 + rC_15_6
        rC_15_6 = vA_15_1 * vB_1_6 + rC_15_6
        rC_15_6 = vA_15_2 * vB_2_6 + rC_15_6
        rC_15_6 = vA_15_3 * vB_3_6 + rC_15_6
        rC_15_6 = vA_15_4 * vB_4_6 + rC_15_6
        rC_15_6 = vA_15_5 * vB_5_6 + rC_15_6
        rC_15_6 = vA_15_6 * vB_6_6 + rC_15_6
        rC_15_6 = vA_15_7 * vB_7_6 + rC_15_6
        rC_15_6 = vA_15_8 * vB_8_6 + rC_15_6
        rC_15_6 = vA_15_9 * vB_9_6 + rC_15_6
        rC_15_6 = rC_15_6 * alpha
        rC_16_6 = 0.0
        rC_16_6 = vA_16_0 * vB_0_6 + rC_16_6
        rC_16_6 = vA_16_1 * vB_1_6 + rC_16_6
        rC_16_6 = vA_16_2 * vB_2_6 + rC_16_6
        rC_16_6 = vA_16_3 * vB_3_6 + rC_16_6
        rC_16_6 = vA_16_4 * vB_4_6 + rC_16_6
        rC_16_6 = vA_16_5 * vB_5_6 + rC_16_6
        rC_16_6 = vA_16_6 * vB_6_6 + rC_16_6
        rC_16_6 = vA_16_7 * vB_7_6 + rC_16_6
        rC_16_6 = vA_16_8 * vB_8_6 + rC_16_6
        rC_16_6 = vA_16_9 * vB_9_6 + rC_16_6
        rC_16_6 = rC_16_6 * alpha
        rC_17_6 = 0.0
        rC_17_6 = vA_17_0 * vB_0_6 + rC_17_6
        rC_17_6 = vA_17_1 * vB_1_6 + rC_17_6
        rC_17_6 = vA_17_2 * vB_2_6 + rC_17_6
        rC_17_6 = vA_17_3 * vB_3_6 + rC_17_6
        rC_17_6 = vA_17_4 * vB_4_6 + rC_17_6
        rC_17_6 = vA_17_5 * vB_5_6 + rC_17_6
        rC_17_6 = vA_17_6 * vB_6_6 + rC_17_6
        rC_17_6 = vA_17_7 * vB_7_6 + rC_17_6
        rC_17_6 = vA_17_8 * vB_8_6 + rC_17_6
        rC_17_6 = vA_17_9 * vB_9_6 + rC_17_6
        rC_17_6 = rC_17_6 * alpha
        rC_18_6 = 0.0
        rC_18_6 = vA_18_0 * vB_0_6 + rC_18_6
        rC_18_6 = vA_18_1 * vB_1_6 + rC_18_6
        rC_18_6 = vA_18_2 * vB_2_6 + rC_18_6
        rC_18_6 = vA_18_3 * vB_3_6 + rC_18_6
        rC_18_6 = vA_18_4 * vB_4_6 + rC_18_6
        rC_18_6 = vA_18_5 * vB_5_6 + rC_18_6
        rC_18_6 = vA_18_6 * vB_6_6 + rC_18_6
        rC_18_6 = vA_18_7 * vB_7_6 + rC_18_6
        rC_18_6 = vA_18_8 * vB_8_6 + rC_18_6
        rC_18_6 = vA_18_9 * vB_9_6 + rC_18_6
        rC_18_6 = rC_18_6 * alpha
        rC_19_6 = 0.0
        rC_19_6 = vA_19_0 * vB_0_6 + rC_19_6
        rC_19_6 = vA_19_1 * vB_1_6 + rC_19_6
        rC_19_6 = vA_19_2 * vB_2_6 + rC_19_6
        rC_19_6 = vA_19_3 * vB_3_6 + rC_19_6
        rC_19_6 = vA_19_4 * vB_4_6 + rC_19_6
        rC_19_6 = vA_19_5 * vB_5_6 + rC_19_6
        rC_19_6 = vA_19_6 * vB_6_6 + rC_19_6
        rC_19_6 = vA_19_7 * vB_7_6 + rC_19_6
        rC_19_6 = vA_19_8 * vB_8_6 + rC_19_6
        rC_19_6 = vA_19_9 * vB_9_6 + rC_19_6
        rC_19_6 = rC_19_6 * alpha
        rC_0_7 = 0.0
        rC_0_7 = vA_0_0 * vB_0_7 + rC_0_7
        rC_0_7 = vA_0_1 * vB_1_7 + rC_0_7
        rC_0_7 = vA_0_2 * vB_2_7 + rC_0_7
        rC_0_7 = vA_0_3 * vB_3_7 + rC_0_7
        rC_0_7 = vA_0_4 * vB_4_7 + rC_0_7
        rC_0_7 = vA_0_5 * vB_5_7 + rC_0_7
        rC_0_7 = vA_0_6 * vB_6_7 + rC_0_7
        rC_0_7 = vA_0_7 * vB_7_7 + rC_0_7
        rC_0_7 = vA_0_8 * vB_8_7 + rC_0_7
        rC_0_7 = vA_0_9 * vB_9_7 + rC_0_7
        rC_0_7 = rC_0_7 * alpha
        rC_1_7 = 0.0
        rC_1_7 = vA_1_0 * vB_0_7 + rC_1_7
        rC_1_7 = vA_1_1 * vB_1_7 + rC_1_7
        rC_1_7 = vA_1_2 * vB_2_7 + rC_1_7
        rC_1_7 = vA_1_3 * vB_3_7 + rC_1_7
        rC_1_7 = vA_1_4 * vB_4_7 + rC_1_7
        rC_1_7 = vA_1_5 * vB_5_7 + rC_1_7
        rC_1_7 = vA_1_6 * vB_6_7 + rC_1_7
        rC_1_7 = vA_1_7 * vB_7_7 + rC_1_7
        rC_1_7 = vA_1_8 * vB_8_7 + rC_1_7
        rC_1_7 = vA_1_9 * vB_9_7 + rC_1_7
        rC_1_7 = rC_1_7 * alpha
        rC_2_7 = 0.0
        rC_2_7 = vA_2_0 * vB_0_7 + rC_2_7
        rC_2_7 = vA_2_1 * vB_1_7 + rC_2_7
        rC_2_7 = vA_2_2 * vB_2_7 + rC_2_7
        rC_2_7 = vA_2_3 * vB_3_7 + rC_2_7
        rC_2_7 = vA_2_4 * vB_4_7 + rC_2_7
        rC_2_7 = vA_2_5 * vB_5_7 + rC_2_7
        rC_2_7 = vA_2_6 * vB_6_7 + rC_2_7
        rC_2_7 = vA_2_7 * vB_7_7 + rC_2_7
        rC_2_7 = vA_2_8 * vB_8_7 + rC_2_7
        rC_2_7 = vA_2_9 * vB_9_7 + rC_2_7
        rC_2_7 = rC_2_7 * alpha
        rC_3_7 = 0.0
        rC_3_7 = vA_3_0 * vB_0_7 + rC_3_7
        rC_3_7 = vA_3_1 * vB_1_7 + rC_3_7
        rC_3_7 = vA_3_2 * vB_2_7 + rC_3_7
        rC_3_7 = vA_3_3 * vB_3_7 + rC_3_7
        rC_3_7 = vA_3_4 * vB_4_7 + rC_3_7
        rC_3_7 = vA_3_5 * vB_5_7 + rC_3_7
        rC_3_7 = vA_3_6 * vB_6_7 + rC_3_7
        rC_3_7 = vA_3_7 * vB_7_7 + rC_3_7
        rC_3_7 = vA_3_8 * vB_8_7 + rC_3_7
        rC_3_7 = vA_3_9 * vB_9_7 + rC_3_7
        rC_3_7 = rC_3_7 * alpha
        rC_4_7 = 0.0
        rC_4_7 = vA_4_0 * vB_0_7 + rC_4_7
        rC_4_7 = vA_4_1 * vB_1_7 + rC_4_7
        rC_4_7 = vA_4_2 * vB_2_7 + rC_4_7
        rC_4_7 = vA_4_3 * vB_3_7 + rC_4_7
        rC_4_7 = vA_4_4 * vB_4_7 + rC_4_7
        rC_4_7 = vA_4_5 * vB_5_7 + rC_4_7
        rC_4_7 = vA_4_6 * vB_6_7 + rC_4_7
        rC_4_7 = vA_4_7 * vB_7_7 + rC_4_7
        rC_4_7 = vA_4_8 * vB_8_7 + rC_4_7
        rC_4_7 = vA_4_9 * vB_9_7 + rC_4_7
        rC_4_7 = rC_4_7 * alpha
        rC_5_7 = 0.0
        rC_5_7 = vA_5_0 * vB_0_7 + rC_5_7
        rC_5_7 = vA_5_1 * vB_1_7 + rC_5_7
        rC_5_7 = vA_5_2 * vB_2_7 + rC_5_7
        rC_5_7 = vA_5_3 * vB_3_7 + rC_5_7
        rC_5_7 = vA_5_4 * vB_4_7 + rC_5_7
        rC_5_7 = vA_5_5 * vB_5_7 + rC_5_7
        rC_5_7 = vA_5_6 * vB_6_7 + rC_5_7
        rC_5_7 = vA_5_7 * vB_7_7 + rC_5_7
        rC_5_7 = vA_5_8 * vB_8_7 + rC_5_7
        rC_5_7 = vA_5_9 * vB_9_7 + rC_5_7
        rC_5_7 = rC_5_7 * alpha
        rC_6_7 = 0.0
        rC_6_7 = vA_6_0 * vB_0_7 + rC_6_7
        rC_6_7 = vA_6_1 * vB_1_7 + rC_6_7
        rC_6_7 = vA_6_2 * vB_2_7 + rC_6_7
        rC_6_7 = vA_6_3 * vB_3_7 + rC_6_7
        rC_6_7 = vA_6_4 * vB_4_7 + rC_6_7
        rC_6_7 = vA_6_5 * vB_5_7 + rC_6_7
        rC_6_7 = vA_6_6 * vB_6_7 + rC_6_7
        rC_6_7 = vA_6_7 * vB_7_7 + rC_6_7
        rC_6_7 = vA_6_8 * vB_8_7 + rC_6_7
        rC_6_7 = vA_6_9 * vB_9_7 + rC_6_7
        rC_6_7 = rC_6_7 * alpha
        rC_7_7 = 0.0
        rC_7_7 = vA_7_0 * vB_0_7 + rC_7_7
        rC_7_7 = vA_7_1 * vB_1_7 + rC_7_7
        rC_7_7 = vA_7_2 * vB_2_7 + rC_7_7
        rC_7_7 = vA_7_3 * vB_3_7 + rC_7_7
        rC_7_7 = vA_7_4 * vB_4_7 + rC_7_7
        rC_7_7 = vA_7_5 * vB_5_7 + rC_7_7
        rC_7_7 = vA_7_6 * vB_6_7 + rC_7_7
        rC_7_7 = vA_7_7 * vB_7_7 + rC_7_7
        rC_7_7 = vA_7_8 * vB_8_7 + rC_7_7
        rC_7_7 = vA_7_9 * vB_9_7 + rC_7_7
        rC_7_7 = rC_7_7 * alpha
        rC_8_7 = 0.0
        rC_8_7 = vA_8_0 * vB_0_7 + rC_8_7
        rC_8_7 = vA_8_1 * vB_1_7 + rC_8_7
        rC_8_7 = vA_8_2 * vB_2_7 + rC_8_7
        rC_8_7 = vA_8_3 * vB_3_7 + rC_8_7
        rC_8_7 = vA_8_4 * vB_4_7 + rC_8_7
        rC_8_7 = vA_8_5 * vB_5_7 + rC_8_7
        rC_8_7 = vA_8_6 * vB_6_7 + rC_8_7
        rC_8_7 = vA_8_7 * vB_7_7 + rC_8_7
        rC_8_7 = vA_8_8 * vB_8_7 + rC_8_7
        rC_8_7 = vA_8_9 * vB_9_7 + rC_8_7
        rC_8_7 = rC_8_7 * alpha
        rC_9_7 = 0.0
        rC_9_7 = vA_9_0 * vB_0_7 + rC_9_7
        rC_9_7 = vA_9_1 * vB_1_7 + rC_9_7
        rC_9_7 = vA_9_2 * vB_2_7 + rC_9_7
        rC_9_7 = vA_9_3 * vB_3_7 + rC_9_7
        rC_9_7 = vA_9_4 * vB_4_7 + rC_9_7
        rC_9_7 = vA_9_5 * vB_5_7 + rC_9_7
        rC_9_7 = vA_9_6 * vB_6_7 + rC_9_7
        rC_9_7 = vA_9_7 * vB_7_7 + rC_9_7
        rC_9_7 = vA_9_8 * vB_8_7 + rC_9_7
        rC_9_7 = vA_9_9 * vB_9_7 + rC_9_7
        rC_9_7 = rC_9_7 * alpha
        rC_10_7 = 0.0
        rC_10_7 = vA_10_0 * vB_0_7 + rC_10_7
        rC_10_7 = vA_10_1 * vB_1_7 + rC_10_7
        rC_10_7 = vA_10_2 * vB_2_7 + rC_10_7
        rC_10_7 = vA_10_3 * vB_3_7 + rC_10_7
        rC_10_7 = vA_10_4 * vB_4_7 + rC_10_7
        rC_10_7 = vA_10_5 * vB_5_7 + rC_10_7
        rC_10_7 = vA_10_6 * vB_6_7 + rC_10_7
        rC_10_7 = vA_10_7 * vB_7_7 + rC_10_7
        rC_10_7 = vA_10_8 * vB_8_7 + rC_10_7
        rC_10_7 = vA_10_9 * vB_9_7 + rC_10_7
        rC_10_7 = rC_10_7 * alpha
        rC_11_7 = 0.0
        rC_11_7 = vA_11_0 * vB_0_7 + rC_11_7
        rC_11_7 = vA_11_1 * vB_1_7 + rC_11_7
        rC_11_7 = vA_11_2 * vB_2_7 + rC_11_7
        rC_11_7 = vA_11_3 * vB_3_7 + rC_11_7
        rC_11_7 = vA_11_4 * vB_4_7 + rC_11_7
        rC_11_7 = vA_11_5 * vB_5_7 + rC_11_7
        rC_11_7 = vA_11_6 * vB_6_7 + rC_11_7
        rC_11_7 = vA_11_7 * vB_7_7 + rC_11_7
        rC_11_7 = vA_11_8 * vB_8_7 + rC_11_7
        rC_11_7 = vA_11_9 * vB_9_7 + rC_11_7
        rC_11_7 = rC_11_7 * alpha
        rC_12_7 = 0.0
        rC_12_7 = vA_12_0 * vB_0_7 + rC_12_7
        rC_12_7 = vA_12_1 * vB_1_7 + rC_12_7
        rC_12_7 = vA_12_2 * vB_2_7 + rC_12_7
        rC_12_7 = vA_12_3 * vB_3_7 + rC_12_7
        rC_12_7 = vA_12_4 * vB_4_7 + rC_12_7
        rC_12_7 = vA_12_5 * vB_5_7 + rC_12_7
        rC_12_7 = vA_12_6 * vB_6_7 + rC_12_7
        rC_12_7 = vA_12_7 * vB_7_7 + rC_12_7
        rC_12_7 = vA_12_8 * vB_8_7 + rC_12_7
        rC_12_7 = vA_12_9 * vB_9_7 + rC_12_7
        rC_12_7 = rC_12_7 * alpha
        rC_13_7 = 0.0
        rC_13_7 = vA_13_0 * vB_0_7 + rC_13_7
        rC_13_7 = vA_13_1 * vB_1_7 + rC_13_7
        rC_13_7 = vA_13_2 * vB_2_7 + rC_13_7
        rC_13_7 = vA_13_3 * vB_3_7 + rC_13_7
        rC_13_7 = vA_13_4 * vB_4_7 + rC_13_7
        rC_13_7 = vA_13_5 * vB_5_7 + rC_13_7
        rC_13_7 = vA_13_6 * vB_6_7 + rC_13_7
        rC_13_7 = vA_13_7 * vB_7_7 + rC_13_7
        rC_13_7 = vA_13_8 * vB_8_7 + rC_13_7
        rC_13_7 = vA_13_9 * vB_9_7 + rC_13_7
        rC_13_7 = rC_13_7 * alpha
        rC_14_7 = 0.0
        rC_14_7 = vA_14_0 * vB_0_7 + rC_14_7
        rC_14_7 = vA_14_1 * vB_1_7 + rC_14_7
        rC_14_7 = vA_14_2 * vB_2_7 + rC_14_7
        rC_14_7 = vA_14_3 * vB_3_7 + rC_14_7
        rC_14_7 = vA_14_4 * vB_4_7 + rC_14_7
        rC_14_7 = vA_14_5 * vB_5_7 + rC_14_7
        rC_14_7 = vA_14_6 * vB_6_7 + rC_14_7
        rC_14_7 = vA_14_7 * vB_7_7 + rC_14_7
        rC_14_7 = vA_14_8 * vB_8_7 + rC_14_7
        rC_14_7 = vA_14_9 * vB_9_7 + rC_14_7
        rC_14_7 = rC_14_7 * alpha
        rC_15_7 = 0.0
        rC_15_7 = vA_15_0 * vB_0_7 + rC_15_7
        rC_15_7 = vA_15_1 * vB_1_7 + rC_15_7
        rC_15_7 = vA_15_2 * vB_2_7 + rC_15_7
        rC_15_7 = vA_15_3 * vB_3_7 + rC_15_7
        rC_15_7 = vA_15_4 * vB_4_7 + rC_15_7
        rC_15_7 = vA_15_5 * vB_5_7 + rC_15_7
        rC_15_7 = vA_15_6 * vB_6_7 + rC_15_7
        rC_15_7 = vA_15_7 * vB_7_7 + rC_15_7
        rC_15_7 = vA_15_8 * vB_8_7 + rC_15_7
        rC_15_7 = vA_15_9 * vB_9_7 + rC_15_7
        rC_15_7 = rC_15_7 * alpha
        rC_16_7 = 0.0
        rC_16_7 = vA_16_0 * vB_0_7 + rC_16_7
        rC_16_7 = vA_16_1 * vB_1_7 + rC_16_7
        rC_16_7 = vA_16_2 * vB_2_7 + rC_16_7
        rC_16_7 = vA_16_3 * vB_3_7 + rC_16_7
        rC_16_7 = vA_16_4 * vB_4_7 + rC_16_7
        rC_16_7 = vA_16_5 * vB_5_7 + rC_16_7
        rC_16_7 = vA_16_6 * vB_6_7 + rC_16_7
        rC_16_7 = vA_16_7 * vB_7_7 + rC_16_7
        rC_16_7 = vA_16_8 * vB_8_7 + rC_16_7
        rC_16_7 = vA_16_9 * vB_9_7 + rC_16_7
        rC_16_7 = rC_16_7 * alpha
        rC_17_7 = 0.0
        rC_17_7 = vA_17_0 * vB_0_7 + rC_17_7
        rC_17_7 = vA_17_1 * vB_1_7 + rC_17_7
        rC_17_7 = vA_17_2 * vB_2_7 + rC_17_7
        rC_17_7 = vA_17_3 * vB_3_7 + rC_17_7
        rC_17_7 = vA_17_4 * vB_4_7 + rC_17_7
        rC_17_7 = vA_17_5 * vB_5_7 + rC_17_7
        rC_17_7 = vA_17_6 * vB_6_7 + rC_17_7
        rC_17_7 = vA_17_7 * vB_7_7 + rC_17_7
        rC_17_7 = vA_17_8 * vB_8_7 + rC_17_7
        rC_17_7 = vA_17_9 * vB_9_7 + rC_17_7
        rC_17_7 = rC_17_7 * alpha
        rC_18_7 = 0.0
        rC_18_7 = vA_18_0 * vB_0_7 + rC_18_7
        rC_18_7 = vA_18_1 * vB_1_7 + rC_18_7
        rC_18_7 = vA_18_2 * vB_2_7 + rC_18_7
        rC_18_7 = vA_18_3 * vB_3_7 + rC_18_7
        rC_18_7 = vA_18_4 * vB_4_7 + rC_18_7
        rC_18_7 = vA_18_5 * vB_5_7 + rC_18_7
        rC_18_7 = vA_18_6 * vB_6_7 + rC_18_7
        rC_18_7 = vA_18_7 * vB_7_7 + rC_18_7
        rC_18_7 = vA_18_8 * vB_8_7 + rC_18_7
        rC_18_7 = vA_18_9 * vB_9_7 + rC_18_7
        rC_18_7 = rC_18_7 * alpha
        rC_19_7 = 0.0
        rC_19_7 = vA_19_0 * vB_0_7 + rC_19_7
        rC_19_7 = vA_19_1 * vB_1_7 + rC_19_7
        rC_19_7 = vA_19_2 * vB_2_7 + rC_19_7
        rC_19_7 = vA_19_3 * vB_3_7 + rC_19_7
        rC_19_7 = vA_19_4 * vB_4_7 + rC_19_7
        rC_19_7 = vA_19_5 * vB_5_7 + rC_19_7
        rC_19_7 = vA_19_6 * vB_6_7 + rC_19_7
        rC_19_7 = vA_19_7 * vB_7_7 + rC_19_7
        rC_19_7 = vA_19_8 * vB_8_7 + rC_19_7
        rC_19_7 = vA_19_9 * vB_9_7 + rC_19_7
        rC_19_7 = rC_19_7 * alpha
        rC_0_8 = 0.0
        rC_0_8 = vA_0_0 * vB_0_8 + rC_0_8
        rC_0_8 = vA_0_1 * vB_1_8 + rC_0_8
        rC_0_8 = vA_0_2 * vB_2_8 + rC_0_8
        rC_0_8 = vA_0_3 * vB_3_8 + rC_0_8
        rC_0_8 = vA_0_4 * vB_4_8 + rC_0_8
        rC_0_8 = vA_0_5 * vB_5_8 + rC_0_8
        rC_0_8 = vA_0_6 * vB_6_8 + rC_0_8
        rC_0_8 = vA_0_7 * vB_7_8 + rC_0_8
        rC_0_8 = vA_0_8 * vB_8_8 + rC_0_8
        rC_0_8 = vA_0_9 * vB_9_8 + rC_0_8
        rC_0_8 = rC_0_8 * alpha
        rC_1_8 = 0.0
        rC_1_8 = vA_1_0 * vB_0_8 + rC_1_8
        rC_1_8 = vA_1_1 * vB_1_8 + rC_1_8
        rC_1_8 = vA_1_2 * vB_2_8 + rC_1_8
        rC_1_8 = vA_1_3 * vB_3_8 + rC_1_8
        rC_1_8 = vA_1_4 * vB_4_8 + rC_1_8
        rC_1_8 = vA_1_5 * vB_5_8 + rC_1_8
        rC_1_8 = vA_1_6 * vB_6_8 + rC_1_8
        rC_1_8 = vA_1_7 * vB_7_8 + rC_1_8
        rC_1_8 = vA_1_8 * vB_8_8 + rC_1_8
        rC_1_8 = vA_1_9 * vB_9_8 + rC_1_8
        rC_1_8 = rC_1_8 * alpha
        rC_2_8 = 0.0
        rC_2_8 = vA_2_0 * vB_0_8 + rC_2_8
        rC_2_8 = vA_2_1 * vB_1_8 + rC_2_8
        rC_2_8 = vA_2_2 * vB_2_8 + rC_2_8
        rC_2_8 = vA_2_3 * vB_3_8 + rC_2_8
        rC_2_8 = vA_2_4 * vB_4_8 + rC_2_8
        rC_2_8 = vA_2_5 * vB_5_8 + rC_2_8
        rC_2_8 = vA_2_6 * vB_6_8 + rC_2_8
        rC_2_8 = vA_2_7 * vB_7_8 + rC_2_8
        rC_2_8 = vA_2_8 * vB_8_8 + rC_2_8
        rC_2_8 = vA_2_9 * vB_9_8 + rC_2_8
        rC_2_8 = rC_2_8 * alpha
        rC_3_8 = 0.0
        rC_3_8 = vA_3_0 * vB_0_8 + rC_3_8
        rC_3_8 = vA_3_1 * vB_1_8 + rC_3_8
        rC_3_8 = vA_3_2 * vB_2_8 + rC_3_8
        rC_3_8 = vA_3_3 * vB_3_8 + rC_3_8
        rC_3_8 = vA_3_4 * vB_4_8 + rC_3_8
        rC_3_8 = vA_3_5 * vB_5_8 + rC_3_8
        rC_3_8 = vA_3_6 * vB_6_8 + rC_3_8
        rC_3_8 = vA_3_7 * vB_7_8 + rC_3_8
        rC_3_8 = vA_3_8 * vB_8_8 + rC_3_8
        rC_3_8 = vA_3_9 * vB_9_8 + rC_3_8
        rC_3_8 = rC_3_8 * alpha
        rC_4_8 = 0.0
        rC_4_8 = vA_4_0 * vB_0_8 + rC_4_8
        rC_4_8 = vA_4_1 * vB_1_8 + rC_4_8
        rC_4_8 = vA_4_2 * vB_2_8 + rC_4_8
        rC_4_8 = vA_4_3 * vB_3_8 + rC_4_8
        rC_4_8 = vA_4_4 * vB_4_8 + rC_4_8
        rC_4_8 = vA_4_5 * vB_5_8 + rC_4_8
        rC_4_8 = vA_4_6 * vB_6_8 + rC_4_8
        rC_4_8 = vA_4_7 * vB_7_8 + rC_4_8
        rC_4_8 = vA_4_8 * vB_8_8 + rC_4_8
        rC_4_8 = vA_4_9 * vB_9_8 + rC_4_8
        rC_4_8 = rC_4_8 * alpha
        rC_5_8 = 0.0
        rC_5_8 = vA_5_0 * vB_0_8 + rC_5_8
        rC_5_8 = vA_5_1 * vB_1_8 + rC_5_8
        rC_5_8 = vA_5_2 * vB_2_8 + rC_5_8
        rC_5_8 = vA_5_3 * vB_3_8 + rC_5_8
        rC_5_8 = vA_5_4 * vB_4_8 + rC_5_8
        rC_5_8 = vA_5_5 * vB_5_8 + rC_5_8
        rC_5_8 = vA_5_6 * vB_6_8 + rC_5_8
        rC_5_8 = vA_5_7 * vB_7_8 + rC_5_8
        rC_5_8 = vA_5_8 * vB_8_8 + rC_5_8
        rC_5_8 = vA_5_9 * vB_9_8 + rC_5_8
        rC_5_8 = rC_5_8 * alpha
        rC_6_8 = 0.0
        rC_6_8 = vA_6_0 * vB_0_8 + rC_6_8
        rC_6_8 = vA_6_1 * vB_1_8 + rC_6_8
        rC_6_8 = vA_6_2 * vB_2_8 + rC_6_8
        rC_6_8 = vA_6_3 * vB_3_8 + rC_6_8
        rC_6_8 = vA_6_4 * vB_4_8 + rC_6_8
        rC_6_8 = vA_6_5 * vB_5_8 + rC_6_8
        rC_6_8 = vA_6_6 * vB_6_8 + rC_6_8
        rC_6_8 = vA_6_7 * vB_7_8 + rC_6_8
        rC_6_8 = vA_6_8 * vB_8_8 + rC_6_8
        rC_6_8 = vA_6_9 * vB_9_8 + rC_6_8
        rC_6_8 = rC_6_8 * alpha
        rC_7_8 = 0.0
        rC_7_8 = vA_7_0 * vB_0_8 + rC_7_8
        rC_7_8 = vA_7_1 * vB_1_8 + rC_7_8
        rC_7_8 = vA_7_2 * vB_2_8 + rC_7_8
        rC_7_8 = vA_7_3 * vB_3_8 + rC_7_8
        rC_7_8 = vA_7_4 * vB_4_8 + rC_7_8
        rC_7_8 = vA_7_5 * vB_5_8 + rC_7_8
        rC_7_8 = vA_7_6 * vB_6_8 + rC_7_8
        rC_7_8 = vA_7_7 * vB_7_8 + rC_7_8
        rC_7_8 = vA_7_8 * vB_8_8 + rC_7_8
        rC_7_8 = vA_7_9 * vB_9_8 + rC_7_8
        rC_7_8 = rC_7_8 * alpha
        rC_8_8 = 0.0
        rC_8_8 = vA_8_0 * vB_0_8 + rC_8_8
        rC_8_8 = vA_8_1 * vB_1_8 + rC_8_8
        rC_8_8 = vA_8_2 * vB_2_8 + rC_8_8
        rC_8_8 = vA_8_3 * vB_3_8 + rC_8_8
        rC_8_8 = vA_8_4 * vB_4_8 + rC_8_8
        rC_8_8 = vA_8_5 * vB_5_8 + rC_8_8
        rC_8_8 = vA_8_6 * vB_6_8 + rC_8_8
        rC_8_8 = vA_8_7 * vB_7_8 + rC_8_8
        rC_8_8 = vA_8_8 * vB_8_8 + rC_8_8
        rC_8_8 = vA_8_9 * vB_9_8 + rC_8_8
        rC_8_8 = rC_8_8 * alpha
        rC_9_8 = 0.0
        rC_9_8 = vA_9_0 * vB_0_8 + rC_9_8
        rC_9_8 = vA_9_1 * vB_1_8 + rC_9_8
        rC_9_8 = vA_9_2 * vB_2_8 + rC_9_8
        rC_9_8 = vA_9_3 * vB_3_8 + rC_9_8
        rC_9_8 = vA_9_4 * vB_4_8 + rC_9_8
        rC_9_8 = vA_9_5 * vB_5_8 + rC_9_8
        rC_9_8 = vA_9_6 * vB_6_8 + rC_9_8
        rC_9_8 = vA_9_7 * vB_7_8 + rC_9_8
        rC_9_8 = vA_9_8 * vB_8_8 + rC_9_8
        rC_9_8 = vA_9_9 * vB_9_8 + rC_9_8
        rC_9_8 = rC_9_8 * alpha
        rC_10_8 = 0.0
        rC_10_8 = vA_10_0 * vB_0_8 + rC_10_8
        rC_10_8 = vA_10_1 * vB_1_8 + rC_10_8
        rC_10_8 = vA_10_2 * vB_2_8 + rC_10_8
        rC_10_8 = vA_10_3 * vB_3_8 + rC_10_8
        rC_10_8 = vA_10_4 * vB_4_8 + rC_10_8
        rC_10_8 = vA_10_5 * vB_5_8 + rC_10_8
        rC_10_8 = vA_10_6 * vB_6_8 + rC_10_8
        rC_10_8 = vA_10_7 * vB_7_8 + rC_10_8
        rC_10_8 = vA_10_8 * vB_8_8 + rC_10_8
        rC_10_8 = vA_10_9 * vB_9_8 + rC_10_8
        rC_10_8 = rC_10_8 * alpha
        rC_11_8 = 0.0
        rC_11_8 = vA_11_0 * vB_0_8 + rC_11_8
        rC_11_8 = vA_11_1 * vB_1_8 + rC_11_8
        rC_11_8 = vA_11_2 * vB_2_8 + rC_11_8
        rC_11_8 = vA_11_3 * vB_3_8 + rC_11_8
        rC_11_8 = vA_11_4 * vB_4_8 + rC_11_8
        rC_11_8 = vA_11_5 * vB_5_8 + rC_11_8
        rC_11_8 = vA_11_6 * vB_6_8 + rC_11_8
        rC_11_8 = vA_11_7 * vB_7_8 + rC_11_8
        rC_11_8 = vA_11_8 * vB_8_8 + rC_11_8
        rC_11_8 = vA_11_9 * vB_9_8 + rC_11_8
        rC_11_8 = rC_11_8 * alpha
        rC_12_8 = 0.0
        rC_12_8 = vA_12_0 * vB_0_8 + rC_12_8
        rC_12_8 = vA_12_1 * vB_1_8 + rC_12_8
        rC_12_8 = vA_12_2 * vB_2_8 + rC_12_8
        rC_12_8 = vA_12_3 * vB_3_8 + rC_12_8
        rC_12_8 = vA_12_4 * vB_4_8 + rC_12_8
        rC_12_8 = vA_12_5 * vB_5_8 + rC_12_8
        rC_12_8 = vA_12_6 * vB_6_8 + rC_12_8
        rC_12_8 = vA_12_7 * vB_7_8 + rC_12_8
        rC_12_8 = vA_12_8 * vB_8_8 + rC_12_8
        rC_12_8 = vA_12_9 * vB_9_8 + rC_12_8
        rC_12_8 = rC_12_8 * alpha
        rC_13_8 = 0.0
        rC_13_8 = vA_13_0 * vB_0_8 + rC_13_8
        rC_13_8 = vA_13_1 * vB_1_8 + rC_13_8
        rC_13_8 = vA_13_2 * vB_2_8 + rC_13_8
        rC_13_8 = vA_13_3 * vB_3_8 + rC_13_8
        rC_13_8 = vA_13_4 * vB_4_8 + rC_13_8
        rC_13_8 = vA_13_5 * vB_5_8 + rC_13_8
        rC_13_8 = vA_13_6 * vB_6_8 + rC_13_8
        rC_13_8 = vA_13_7 * vB_7_8 + rC_13_8
        rC_13_8 = vA_13_8 * vB_8_8 + rC_13_8
        rC_13_8 = vA_13_9 * vB_9_8 + rC_13_8
        rC_13_8 = rC_13_8 * alpha
        rC_14_8 = 0.0
        rC_14_8 = vA_14_0 * vB_0_8 + rC_14_8
        rC_14_8 = vA_14_1 * vB_1_8 + rC_14_8
        rC_14_8 = vA_14_2 * vB_2_8 + rC_14_8
        rC_14_8 = vA_14_3 * vB_3_8 + rC_14_8
        rC_14_8 = vA_14_4 * vB_4_8 + rC_14_8
        rC_14_8 = vA_14_5 * vB_5_8 + rC_14_8
        rC_14_8 = vA_14_6 * vB_6_8 + rC_14_8
        rC_14_8 = vA_14_7 * vB_7_8 + rC_14_8
        rC_14_8 = vA_14_8 * vB_8_8 + rC_14_8
        rC_14_8 = vA_14_9 * vB_9_8 + rC_14_8
        rC_14_8 = rC_14_8 * alpha
        rC_15_8 = 0.0
        rC_15_8 = vA_15_0 * vB_0_8 + rC_15_8
        rC_15_8 = vA_15_1 * vB_1_8 + rC_15_8
        rC_15_8 = vA_15_2 * vB_2_8 + rC_15_8
        rC_15_8 = vA_15_3 * vB_3_8 + rC_15_8
        rC_15_8 = vA_15_4 * vB_4_8 + rC_15_8
        rC_15_8 = vA_15_5 * vB_5_8 + rC_15_8
        rC_15_8 = vA_15_6 * vB_6_8 + rC_15_8
        rC_15_8 = vA_15_7 * vB_7_8 + rC_15_8
        rC_15_8 = vA_15_8 * vB_8_8 + rC_15_8
        rC_15_8 = vA_15_9 * vB_9_8 + rC_15_8
        rC_15_8 = rC_15_8 * alpha
        rC_16_8 = 0.0
        rC_16_8 = vA_16_0 * vB_0_8 + rC_16_8
        rC_16_8 = vA_16_1 * vB_1_8 + rC_16_8
        rC_16_8 = vA_16_2 * vB_2_8 + rC_16_8
        rC_16_8 = vA_16_3 * vB_3_8 + rC_16_8
        rC_16_8 = vA_16_4 * vB_4_8 + rC_16_8
        rC_16_8 = vA_16_5 * vB_5_8 + rC_16_8
        rC_16_8 = vA_16_6 * vB_6_8 + rC_16_8
        rC_16_8 = vA_16_7 * vB_7_8 + rC_16_8
        rC_16_8 = vA_16_8 * vB_8_8 + rC_16_8
        rC_16_8 = vA_16_9 * vB_9_8 + rC_16_8
        rC_16_8 = rC_16_8 * alpha
        rC_17_8 = 0.0
        rC_17_8 = vA_17_0 * vB_0_8 + rC_17_8
        rC_17_8 = vA_17_1 * vB_1_8 + rC_17_8
        rC_17_8 = vA_17_2 * vB_2_8 + rC_17_8
        rC_17_8 = vA_17_3 * vB_3_8 + rC_17_8
        rC_17_8 = vA_17_4 * vB_4_8 + rC_17_8
        rC_17_8 = vA_17_5 * vB_5_8 + rC_17_8
        rC_17_8 = vA_17_6 * vB_6_8 + rC_17_8
        rC_17_8 = vA_17_7 * vB_7_8 + rC_17_8
        rC_17_8 = vA_17_8 * vB_8_8 + rC_17_8
        rC_17_8 = vA_17_9 * vB_9_8 + rC_17_8
        rC_17_8 = rC_17_8 * alpha
        rC_18_8 = 0.0
        rC_18_8 = vA_18_0 * vB_0_8 + rC_18_8
        rC_18_8 = vA_18_1 * vB_1_8 + rC_18_8
        rC_18_8 = vA_18_2 * vB_2_8 + rC_18_8
        rC_18_8 = vA_18_3 * vB_3_8 + rC_18_8
        rC_18_8 = vA_18_4 * vB_4_8 + rC_18_8
        rC_18_8 = vA_18_5 * vB_5_8 + rC_18_8
        rC_18_8 = vA_18_6 * vB_6_8 + rC_18_8
        rC_18_8 = vA_18_7 * vB_7_8 + rC_18_8
        rC_18_8 = vA_18_8 * vB_8_8 + rC_18_8
        rC_18_8 = vA_18_9 * vB_9_8 + rC_18_8
        rC_18_8 = rC_18_8 * alpha
        rC_19_8 = 0.0
        rC_19_8 = vA_19_0 * vB_0_8 + rC_19_8
        rC_19_8 = vA_19_1 * vB_1_8 + rC_19_8
        rC_19_8 = vA_19_2 * vB_2_8 + rC_19_8
        rC_19_8 = vA_19_3 * vB_3_8 + rC_19_8
        rC_19_8 = vA_19_4 * vB_4_8 + rC_19_8
        rC_19_8 = vA_19_5 * vB_5_8 + rC_19_8
        rC_19_8 = vA_19_6 * vB_6_8 + rC_19_8
        rC_19_8 = vA_19_7 * vB_7_8 + rC_19_8
        rC_19_8 = vA_19_8 * vB_8_8 + rC_19_8
        rC_19_8 = vA_19_9 * vB_9_8 + rC_19_8
        rC_19_8 = rC_19_8 * alpha
        vC_0_0 = C[e][(0*ldc+0)] if beta != 0.0 else 0.0
        rC_0_0 = vC_0_0 * beta + rC_0_0
        C[e][(0*ldc+0)] = rC_0_0
        vC_1_0 = C[e][(0*ldc+1)] if beta != 0.0 else 0.0
        rC_1_0 = vC_1_0 * beta + rC_1_0
        C[e][(0*ldc+1)] = rC_1_0
        vC_2_0 = C[e][(0*ldc+2)] if beta != 0.0 else 0.0
        rC_2_0 = vC_2_0 * beta + rC_2_0
        C[e][(0*ldc+2)] = rC_2_0
        vC_3_0 = C[e][(0*ldc+3)] if beta != 0.0 else 0.0
        rC_3_0 = vC_3_0 * beta + rC_3_0
        C[e][(0*ldc+3)] = rC_3_0
        vC_4_0 = C[e][(0*ldc+4)] if beta != 0.0 else 0.0
        rC_4_0 = vC_4_0 * beta + rC_4_0
        C[e][(0*ldc+4)] = rC_4_0
        vC_5_0 = C[e][(0*ldc+5)] if beta != 0.0 else 0.0
        rC_5_0 = vC_5_0 * beta + rC_5_0
        C[e][(0*ldc+5)] = rC_5_0
        vC_6_0 = C[e][(0*ldc+6)] if beta != 0.0 else 0.0
        rC_6_0 = vC_6_0 * beta + rC_6_0
        C[e][(0*ldc+6)] = rC_6_0
        vC_7_0 = C[e][(0*ldc+7)] if beta != 0.0 else 0.0
        rC_7_0 = vC_7_0 * beta + rC_7_0
        C[e][(0*ldc+7)] = rC_7_0
        vC_8_0 = C[e][(0*ldc+8)] if beta != 0.0 else 0.0
        rC_8_0 = vC_8_0 * beta + rC_8_0
        C[e][(0*ldc+8)] = rC_8_0
        vC_9_0 = C[e][(0*ldc+9)] if beta != 0.0 else 0.0
        rC_9_0 = vC_9_0 * beta + rC_9_0
        C[e][(0*ldc+9)] = rC_9_0
        vC_10_0 = C[e][(0*ldc+10)] if beta != 0.0 else 0.0
        rC_10_0 = vC_10_0 * beta + rC_10_0
        C[e][(0*ldc+10)] = rC_10_0
        vC_11_0 = C[e][(0*ldc+11)] if beta != 0.0 else 0.0
        rC_11_0 = vC_11_0 * beta + rC_11_0
        C[e][(0*ldc+11)] = rC_11_0
        vC_12_0 = C[e][(0*ldc+12)] if beta != 0.0 else 0.0
        rC_12_0 = vC_12_0 * beta + rC_12_0
        C[e][(0*ldc+12)] = rC_12_0
        vC_13_0 = C[e][(0*ldc+13)] if beta != 0.0 else 0.0
        rC_13_0 = vC_13_0 * beta + rC_13_0
        C[e][(0*ldc+13)] = rC_13_0
        vC_14_0 = C[e][(0*ldc+14)] if beta != 0.0 else 0.0
        rC_14_0 = vC_14_0 * beta + rC_14_0
        C[e][(0*ldc+14)] = rC_14_0
        vC_15_0 = C[e][(0*ldc+15)] if beta != 0.0 else 0.0
        rC_15_0 = vC_15_0 * beta + rC_15_0
        C[e][(0*ldc+15)] = rC_15_0
        vC_16_0 = C[e][(0*ldc+16)] if beta != 0.0 else 0.0
        rC_16_0 = vC_16_0 * beta + rC_16_0
        C[e][(0*ldc+16)] = rC_16_0
        vC_17_0 = C[e][(0*ldc+17)] if beta != 0.0 else 0.0
        rC_17_0 = vC_17_0 * beta + rC_17_0
        C[e][(0*ldc+17)] = rC_17_0
        vC_18_0 = C[e][(0*ldc+18)] if beta != 0.0 else 0.0
        rC_18_0 = vC_18_0 * beta + rC_18_0
        C[e][(0*ldc+18)] = rC_18_0
        vC_19_0 = C[e][(0*ldc+19)] if beta != 0.0 else 0.0
        rC_19_0 = vC_19_0 * beta + rC_19_0
        C[e][(0*ldc+19)] = rC_19_0
        vC_0_1 = C[e][(1*ldc+0)] if beta != 0.0 else 0.0
        rC_0_1 = vC_0_1 * beta + rC_0_1
        C[e][(1*ldc+0)] = rC_0_1
        vC_1_1 = C[e][(1*ldc+1)] if beta != 0.0 else 0.0
        rC_1_1 = vC_1_1 * beta + rC_1_1
        C[e][(1*ldc+1)] = rC_1_1
        vC_2_1 = C[e][(1*ldc+2)] if beta != 0.0 else 0.0
        rC_2_1 = vC_2_1 * beta + rC_2_1
        C[e][(1*ldc+2)] = rC_2_1
        vC_3_1 = C[e][(1*ldc+3)] if beta != 0.0 else 0.0
        rC_3_1 = vC_3_1 * beta + rC_3_1
        C[e][(1*ldc+3)] = rC_3_1
        vC_4_1 = C[e][(1*ldc+4)] if beta != 0.0 else 0.0
        rC_4_1 = vC_4_1 * beta + rC_4_1
        C[e][(1*ldc+4)] = rC_4_1
        vC_5_1 = C[e][(1*ldc+5)] if beta != 0.0 else 0.0
        rC_5_1 = vC_5_1 * beta + rC_5_1
        C[e][(1*ldc+5)] = rC_5_1
        vC_6_1 = C[e][(1*ldc+6)] if beta != 0.0 else 0.0
        rC_6_1 = vC_6_1 * beta + rC_6_1
        C[e][(1*ldc+6)] = rC_6_1
        vC_7_1 = C[e][(1*ldc+7)] if beta != 0.0 else 0.0
        rC_7_1 = vC_7_1 * beta + rC_7_1
        C[e][(1*ldc+7)] = rC_7_1
        vC_8_1 = C[e][(1*ldc+8)] if beta != 0.0 else 0.0
        rC_8_1 = vC_8_1 * beta + rC_8_1
        C[e][(1*ldc+8)] = rC_8_1
        vC_9_1 = C[e][(1*ldc+9)] if beta != 0.0 else 0.0
        rC_9_1 = vC_9_1 * beta + rC_9_1
        C[e][(1*ldc+9)] = rC_9_1
        vC_10_1 = C[e][(1*ldc+10)] if beta != 0.0 else 0.0
        rC_10_1 = vC_10_1 * beta + rC_10_1
        C[e][(1*ldc+10)] = rC_10_1
        vC_11_1 = C[e][(1*ldc+11)] if beta != 0.0 else 0.0
        rC_11_1 = vC_11_1 * beta + rC_11_1
        C[e][(1*ldc+11)] = rC_11_1
        vC_12_1 = C[e][(1*ldc+12)] if beta != 0.0 else 0.0
        rC_12_1 = vC_12_1 * beta + rC_12_1
        C[e][(1*ldc+12)] = rC_12_1
        vC_13_1 = C[e][(1*ldc+13)] if beta != 0.0 else 0.0
        rC_13_1 = vC_13_1 * beta + rC_13_1
        C[e][(1*ldc+13)] = rC_13_1
        vC_14_1 = C[e][(1*ldc+14)] if beta != 0.0 else 0.0
        rC_14_1 = vC_14_1 * beta + rC_14_1
        C[e][(1*ldc+14)] = rC_14_1
        vC_15_1 = C[e][(1*ldc+15)] if beta != 0.0 else 0.0
        rC_15_1 = vC_15_1 * beta + rC_15_1
        C[e][(1*ldc+15)] = rC_15_1
        vC_16_1 = C[e][(1*ldc+16)] if beta != 0.0 else 0.0
        rC_16_1 = vC_16_1 * beta + rC_16_1
        C[e][(1*ldc+16)] = rC_16_1
        vC_17_1 = C[e][(1*ldc+17)] if beta != 0.0 else 0.0
        rC_17_1 = vC_17_1 * beta + rC_17_1
        C[e][(1*ldc+17)] = rC_17_1
        vC_18_1 = C[e][(1*ldc+18)] if beta != 0.0 else 0.0
        rC_18_1 = vC_18_1 * beta + rC_18_1
        C[e][(1*ldc+18)] = rC_18_1
        vC_19_1 = C[e][(1*ldc+19)] if beta != 0.0 else 0.0
        rC_19_1 = vC_19_1 * beta + rC_19_1
        C[e][(1*ldc+19)] = rC_19_1
        vC_0_2 = C[e][(2*ldc+0)] if beta != 0.0 else 0.0
        rC_0_2 = vC_0_2 * beta + rC_0_2
        C[e][(2*ldc+0)] = rC_0_2
        vC_1_2 = C[e][(2*ldc+1)] if beta != 0.0 else 0.0
        rC_1_2 = vC_1_2 * beta + rC_1_2
        C[e][(2*ldc+1)] = rC_1_2
        vC_2_2 = C[e][(2*ldc+2)] if beta != 0.0 else 0.0
        rC_2_2 = vC_2_2 * beta + rC_2_2
        C[e][(2*ldc+2)] = rC_2_2
        vC_3_2 = C[e][(2*ldc+3)] if beta != 0.0 else 0.0
        rC_3_2 = vC_3_2 * beta + rC_3_2
        C[e][(2*ldc+3)] = rC_3_2
        vC_4_2 = C[e][(2*ldc+4)] if beta != 0.0 else 0.0
        rC_4_2 = vC_4_2 * beta + rC_4_2
        C[e][(2*ldc+4)] = rC_4_2
        vC_5_2 = C[e][(2*ldc+5)] if beta != 0.0 else 0.0
        rC_5_2 = vC_5_2 * beta + rC_5_2
        C[e][(2*ldc+5)] = rC_5_2
        vC_6_2 = C[e][(2*ldc+6)] if beta != 0.0 else 0.0
        rC_6_2 = vC_6_2 * beta + rC_6_2
        C[e][(2*ldc+6)] = rC_6_2
        vC_7_2 = C[e][(2*ldc+7)] if beta != 0.0 else 0.0
        rC_7_2 = vC_7_2 * beta + rC_7_2
        C[e][(2*ldc+7)] = rC_7_2
        vC_8_2 = C[e][(2*ldc+8)] if beta != 0.0 else 0.0
        rC_8_2 = vC_8_2 * beta + rC_8_2
        C[e][(2*ldc+8)] = rC_8_2
        vC_9_2 = C[e][(2*ldc+9)] if beta != 0.0 else 0.0
        rC_9_2 = vC_9_2 * beta + rC_9_2
        C[e][(2*ldc+9)] = rC_9_2
        vC_10_2 = C[e][(2*ldc+10)] if beta != 0.0 else 0.0
        rC_10_2 = vC_10_2 * beta + rC_10_2
        C[e][(2*ldc+10)] = rC_10_2
        vC_11_2 = C[e][(2*ldc+11)] if beta != 0.0 else 0.0
        rC_11_2 = vC_11_2 * beta + rC_11_2
        C[e][(2*ldc+11)] = rC_11_2
        vC_12_2 = C[e][(2*ldc+12)] if beta != 0.0 else 0.0
        rC_12_2 = vC_12_2 * beta + rC_12_2
        C[e][(2*ldc+12)] = rC_12_2
        vC_13_2 = C[e][(2*ldc+13)] if beta != 0.0 else 0.0
        rC_13_2 = vC_13_2 * beta + rC_13_2
        C[e][(2*ldc+13)] = rC_13_2
        vC_14_2 = C[e][(2*ldc+14)] if beta != 0.0 else 0.0
        rC_14_2 = vC_14_2 * beta + rC_14_2
        C[e][(2*ldc+14)] = rC_14_2
        vC_15_2 = C[e][(2*ldc+15)] if beta != 0.0 else 0.0
        rC_15_2 = vC_15_2 * beta + rC_15_2
        C[e][(2*ldc+15)] = rC_15_2
        vC_16_2 = C[e][(2*ldc+16)] if beta != 0.0 else 0.0
        rC_16_2 = vC_16_2 * beta + rC_16_2
        C[e][(2*ldc+16)] = rC_16_2
        vC_17_2 = C[e][(2*ldc+17)] if beta != 0.0 else 0.0
        rC_17_2 = vC_17_2 * beta + rC_17_2
        C[e][(2*ldc+17)] = rC_17_2
        vC_18_2 = C[e][(2*ldc+18)] if beta != 0.0 else 0.0
        rC_18_2 = vC_18_2 * beta + rC_18_2
        C[e][(2*ldc+18)] = rC_18_2
        vC_19_2 = C[e][(2*ldc+19)] if beta != 0.0 else 0.0
        rC_19_2 = vC_19_2 * beta + rC_19_2
        C[e][(2*ldc+19)] = rC_19_2
        vC_0_3 = C[e][(3*ldc+0)] if beta != 0.0 else 0.0
        rC_0_3 = vC_0_3 * beta + rC_0_3
        C[e][(3*ldc+0)] = rC_0_3
        vC_1_3 = C[e][(3*ldc+1)] if beta != 0.0 else 0.0
        rC_1_3 = vC_1_3 * beta + rC_1_3
        C[e][(3*ldc+1)] = rC_1_3
        vC_2_3 = C[e][(3*ldc+2)] if beta != 0.0 else 0.0
        rC_2_3 = vC_2_3 * beta + rC_2_3
        C[e][(3*ldc+2)] = rC_2_3
        vC_3_3 = C[e][(3*ldc+3)] if beta != 0.0 else 0.0
        rC_3_3 = vC_3_3 * beta + rC_3_3
        C[e][(3*ldc+3)] = rC_3_3
        vC_4_3 = C[e][(3*ldc+4)] if beta != 0.0 else 0.0
        rC_4_3 = vC_4_3 * beta + rC_4_3
        C[e][(3*ldc+4)] = rC_4_3
        vC_5_3 = C[e][(3*ldc+5)] if beta != 0.0 else 0.0
        rC_5_3 = vC_5_3 * beta + rC_5_3
        C[e][(3*ldc+5)] = rC_5_3
        vC_6_3 = C[e][(3*ldc+6)] if beta != 0.0 else 0.0
        rC_6_3 = vC_6_3 * beta + rC_6_3
        C[e][(3*ldc+6)] = rC_6_3
        vC_7_3 = C[e][(3*ldc+7)] if beta != 0.0 else 0.0
        rC_7_3 = vC_7_3 * beta + rC_7_3
        C[e][(3*ldc+7)] = rC_7_3
        vC_8_3 = C[e][(3*ldc+8)] if beta != 0.0 else 0.0
        rC_8_3 = vC_8_3 * beta + rC_8_3
        C[e][(3*ldc+8)] = rC_8_3
        vC_9_3 = C[e][(3*ldc+9)] if beta != 0.0 else 0.0
        rC_9_3 = vC_9_3 * beta + rC_9_3
        C[e][(3*ldc+9)] = rC_9_3
        vC_10_3 = C[e][(3*ldc+10)] if beta != 0.0 else 0.0
        rC_10_3 = vC_10_3 * beta + rC_10_3
        C[e][(3*ldc+10)] = rC_10_3
        vC_11_3 = C[e][(3*ldc+11)] if beta != 0.0 else 0.0
        rC_11_3 = vC_11_3 * beta + rC_11_3
        C[e][(3*ldc+11)] = rC_11_3
        vC_12_3 = C[e][(3*ldc+12)] if beta != 0.0 else 0.0
        rC_12_3 = vC_12_3 * beta + rC_12_3
        C[e][(3*ldc+12)] = rC_12_3
        vC_13_3 = C[e][(3*ldc+13)] if beta != 0.0 else 0.0
        rC_13_3 = vC_13_3 * beta + rC_13_3
        C[e][(3*ldc+13)] = rC_13_3
        vC_14_3 = C[e][(3*ldc+14)] if beta != 0.0 else 0.0
        rC_14_3 = vC_14_3 * beta + rC_14_3
        C[e][(3*ldc+14)] = rC_14_3
        vC_15_3 = C[e][(3*ldc+15)] if beta != 0.0 else 0.0
        rC_15_3 = vC_15_3 * beta + rC_15_3
        C[e][(3*ldc+15)] = rC_15_3
        vC_16_3 = C[e][(3*ldc+16)] if beta != 0.0 else 0.0
        rC_16_3 = vC_16_3 * beta + rC_16_3
        C[e][(3*ldc+16)] = rC_16_3
        vC_17_3 = C[e][(3*ldc+17)] if beta != 0.0 else 0.0
        rC_17_3 = vC_17_3 * beta + rC_17_3
        C[e][(3*ldc+17)] = rC_17_3
        vC_18_3 = C[e][(3*ldc+18)] if beta != 0.0 else 0.0
        rC_18_3 = vC_18_3 * beta + rC_18_3
        C[e][(3*ldc+18)] = rC_18_3
        vC_19_3 = C[e][(3*ldc+19)] if beta != 0.0 else 0.0
        rC_19_3 = vC_19_3 * beta + rC_19_3
        C[e][(3*ldc+19)] = rC_19_3
        vC_0_4 = C[e][(4*ldc+0)] if beta != 0.0 else 0.0
        rC_0_4 = vC_0_4 * beta + rC_0_4
        C[e][(4*ldc+0)] = rC_0_4
        vC_1_4 = C[e][(4*ldc+1)] if beta != 0.0 else 0.0
        rC_1_4 = vC_1_4 * beta + rC_1_4
        C[e][(4*ldc+1)] = rC_1_4
        vC_2_4 = C[e][(4*ldc+2)] if beta != 0.0 else 0.0
        rC_2_4 = vC_2_4 * beta + rC_2_4
        C[e][(4*ldc+2)] = rC_2_4
        vC_3_4 = C[e][(4*ldc+3)] if beta != 0.0 else 0.0
        rC_3_4 = vC_3_4 * beta + rC_3_4
        C[e][(4*ldc+3)] = rC_3_4
        vC_4_4 = C[e][(4*ldc+4)] if beta != 0.0 else 0.0
        rC_4_4 = vC_4_4 * beta + rC_4_4
        C[e][(4*ldc+4)] = rC_4_4
        vC_5_4 = C[e][(4*ldc+5)] if beta != 0.0 else 0.0
        rC_5_4 = vC_5_4 * beta + rC_5_4
        C[e][(4*ldc+5)] = rC_5_4
        vC_6_4 = C[e][(4*ldc+6)] if beta != 0.0 else 0.0
        rC_6_4 = vC_6_4 * beta + rC_6_4
        C[e][(4*ldc+6)] = rC_6_4
        vC_7_4 = C[e][(4*ldc+7)] if beta != 0.0 else 0.0
        rC_7_4 = vC_7_4 * beta + rC_7_4
        C[e][(4*ldc+7)] = rC_7_4
        vC_8_4 = C[e][(4*ldc+8)] if beta != 0.0 else 0.0
        rC_8_4 = vC_8_4 * beta + rC_8_4
        C[e][(4*ldc+8)] = rC_8_4
        vC_9_4 = C[e][(4*ldc+9)] if beta != 0.0 else 0.0
        rC_9_4 = vC_9_4 * beta + rC_9_4
        C[e][(4*ldc+9)] = rC_9_4
        vC_10_4 = C[e][(4*ldc+10)] if beta != 0.0 else 0.0
        rC_10_4 = vC_10_4 * beta + rC_10_4
        C[e][(4*ldc+10)] = rC_10_4
        vC_11_4 = C[e][(4*ldc+11)] if beta != 0.0 else 0.0
        rC_11_4 = vC_11_4 * beta + rC_11_4
        C[e][(4*ldc+11)] = rC_11_4
        vC_12_4 = C[e][(4*ldc+12)] if beta != 0.0 else 0.0
        rC_12_4 = vC_12_4 * beta + rC_12_4
        C[e][(4*ldc+12)] = rC_12_4
        vC_13_4 = C[e][(4*ldc+13)] if beta != 0.0 else 0.0
        rC_13_4 = vC_13_4 * beta + rC_13_4
        C[e][(4*ldc+13)] = rC_13_4
        vC_14_4 = C[e][(4*ldc+14)] if beta != 0.0 else 0.0
        rC_14_4 = vC_14_4 * beta + rC_14_4
        C[e][(4*ldc+14)] = rC_14_4
        vC_15_4 = C[e][(4*ldc+15)] if beta != 0.0 else 0.0
        rC_15_4 = vC_15_4 * beta + rC_15_4
        C[e][(4*ldc+15)] = rC_15_4
        vC_16_4 = C[e][(4*ldc+16)] if beta != 0.0 else 0.0
        rC_16_4 = vC_16_4 * beta + rC_16_4
        C[e][(4*ldc+16)] = rC_16_4
        vC_17_4 = C[e][(4*ldc+17)] if beta != 0.0 else 0.0
        rC_17_4 = vC_17_4 * beta + rC_17_4
        C[e][(4*ldc+17)] = rC_17_4
        vC_18_4 = C[e][(4*ldc+18)] if beta != 0.0 else 0.0
        rC_18_4 = vC_18_4 * beta + rC_18_4
        C[e][(4*ldc+18)] = rC_18_4
        vC_19_4 = C[e][(4*ldc+19)] if beta != 0.0 else 0.0
        rC_19_4 = vC_19_4 * beta + rC_19_4
        C[e][(4*ldc+19)] = rC_19_4
        vC_0_5 = C[e][(5*ldc+0)] if beta != 0.0 else 0.0
        rC_0_5 = vC_0_5 * beta + rC_0_5
        C[e][(5*ldc+0)] = rC_0_5
        vC_1_5 = C[e][(5*ldc+1)] if beta != 0.0 else 0.0
        rC_1_5 = vC_1_5 * beta + rC_1_5
        C[e][(5*ldc+1)] = rC_1_5
        vC_2_5 = C[e][(5*ldc+2)] if beta != 0.0 else 0.0
        rC_2_5 = vC_2_5 * beta + rC_2_5
        C[e][(5*ldc+2)] = rC_2_5
        vC_3_5 = C[e][(5*ldc+3)] if beta != 0.0 else 0.0
        rC_3_5 = vC_3_5 * beta + rC_3_5
        C[e][(5*ldc+3)] = rC_3_5
        vC_4_5 = C[e][(5*ldc+4)] if beta != 0.0 else 0.0
        rC_4_5 = vC_4_5 * beta + rC_4_5
        C[e][(5*ldc+4)] = rC_4_5
        vC_5_5 = C[e][(5*ldc+5)] if beta != 0.0 else 0.0
        rC_5_5 = vC_5_5 * beta + rC_5_5
        C[e][(5*ldc+5)] = rC_5_5
        vC_6_5 = C[e][(5*ldc+6)] if beta != 0.0 else 0.0
        rC_6_5 = vC_6_5 * beta + rC_6_5
        C[e][(5*ldc+6)] = rC_6_5
        vC_7_5 = C[e][(5*ldc+7)] if beta != 0.0 else 0.0
        rC_7_5 = vC_7_5 * beta + rC_7_5
        C[e][(5*ldc+7)] = rC_7_5
        vC_8_5 = C[e][(5*ldc+8)] if beta != 0.0 else 0.0
        rC_8_5 = vC_8_5 * beta + rC_8_5
        C[e][(5*ldc+8)] = rC_8_5
        vC_9_5 = C[e][(5*ldc+9)] if beta != 0.0 else 0.0
        rC_9_5 = vC_9_5 * beta + rC_9_5
        C[e][(5*ldc+9)] = rC_9_5
        vC_10_5 = C[e][(5*ldc+10)] if beta != 0.0 else 0.0
        rC_10_5 = vC_10_5 * beta + rC_10_5
        C[e][(5*ldc+10)] = rC_10_5
        vC_11_5 = C[e][(5*ldc+11)] if beta != 0.0 else 0.0
        rC_11_5 = vC_11_5 * beta + rC_11_5
        C[e][(5*ldc+11)] = rC_11_5
        vC_12_5 = C[e][(5*ldc+12)] if beta != 0.0 else 0.0
        rC_12_5 = vC_12_5 * beta + rC_12_5
        C[e][(5*ldc+12)] = rC_12_5
        vC_13_5 = C[e][(5*ldc+13)] if beta != 0.0 else 0.0
        rC_13_5 = vC_13_5 * beta + rC_13_5
        C[e][(5*ldc+13)] = rC_13_5
        vC_14_5 = C[e][(5*ldc+14)] if beta != 0.0 else 0.0
        rC_14_5 = vC_14_5 * beta + rC_14_5
        C[e][(5*ldc+14)] = rC_14_5
        vC_15_5 = C[e][(5*ldc+15)] if beta != 0.0 else 0.0
        rC_15_5 = vC_15_5 * beta + rC_15_5
        C[e][(5*ldc+15)] = rC_15_5
        vC_16_5 = C[e][(5*ldc+16)] if beta != 0.0 else 0.0
        rC_16_5 = vC_16_5 * beta + rC_16_5
        C[e][(5*ldc+16)] = rC_16_5
        vC_17_5 = C[e][(5*ldc+17)] if beta != 0.0 else 0.0
        rC_17_5 = vC_17_5 * beta + rC_17_5
        C[e][(5*ldc+17)] = rC_17_5
        vC_18_5 = C[e][(5*ldc+18)] if beta != 0.0 else 0.0
        rC_18_5 = vC_18_5 * beta + rC_18_5
        C[e][(5*ldc+18)] = rC_18_5
        vC_19_5 = C[e][(5*ldc+19)] if beta != 0.0 else 0.0
        rC_19_5 = vC_19_5 * beta + rC_19_5
        C[e][(5*ldc+19)] = rC_19_5
        vC_0_6 = C[e][(6*ldc+0)] if beta != 0.0 else 0.0
        rC_0_6 = vC_0_6 * beta + rC_0_6
        C[e][(6*ldc+0)] = rC_0_6
        vC_1_6 = C[e][(6*ldc+1)] if beta != 0.0 else 0.0
        rC_1_6 = vC_1_6 * beta + rC_1_6
        C[e][(6*ldc+1)] = rC_1_6
        vC_2_6 = C[e][(6*ldc+2)] if beta != 0.0 else 0.0
        rC_2_6 = vC_2_6 * beta + rC_2_6
        C[e][(6*ldc+2)] = rC_2_6
        vC_3_6 = C[e][(6*ldc+3)] if beta != 0.0 else 0.0
        rC_3_6 = vC_3_6 * beta + rC_3_6
        C[e][(6*ldc+3)] = rC_3_6
        vC_4_6 = C[e][(6*ldc+4)] if beta != 0.0 else 0.0
        rC_4_6 = vC_4_6 * beta + rC_4_6
        C[e][(6*ldc+4)] = rC_4_6
        vC_5_6 = C[e][(6*ldc+5)] if beta != 0.0 else 0.0
        rC_5_6 = vC_5_6 * beta + rC_5_6
        C[e][(6*ldc+5)] = rC_5_6
        vC_6_6 = C[e][(6*ldc+6)] if beta != 0.0 else 0.0
        rC_6_6 = vC_6_6 * beta + rC_6_6
        C[e][(6*ldc+6)] = rC_6_6
        vC_7_6 = C[e][(6*ldc+7)] if beta != 0.0 else 0.0
        rC_7_6 = vC_7_6 * beta + rC_7_6
        C[e][(6*ldc+7)] = rC_7_6
        vC_8_6 = C[e][(6*ldc+8)] if beta != 0.0 else 0.0
        rC_8_6 = vC_8_6 * beta + rC_8_6
        C[e][(6*ldc+8)] = rC_8_6
        vC_9_6 = C[e][(6*ldc+9)] if beta != 0.0 else 0.0
        rC_9_6 = vC_9_6 * beta + rC_9_6
        C[e][(6*ldc+9)] = rC_9_6
        vC_10_6 = C[e][(6*ldc+10)] if beta != 0.0 else 0.0
        rC_10_6 = vC_10_6 * beta + rC_10_6
        C[e][(6*ldc+10)] = rC_10_6
        vC_11_6 = C[e][(6*ldc+11)] if beta != 0.0 else 0.0
        rC_11_6 = vC_11_6 * beta + rC_11_6
        C[e][(6*ldc+11)] = rC_11_6
        vC_12_6 = C[e][(6*ldc+12)] if beta != 0.0 else 0.0
        rC_12_6 = vC_12_6 * beta + rC_12_6
        C[e][(6*ldc+12)] = rC_12_6
        vC_13_6 = C[e][(6*ldc+13)] if beta != 0.0 else 0.0
        rC_13_6 = vC_13_6 * beta + rC_13_6
        C[e][(6*ldc+13)] = rC_13_6
        vC_14_6 = C[e][(6*ldc+14)] if beta != 0.0 else 0.0
        rC_14_6 = vC_14_6 * beta + rC_14_6
        C[e][(6*ldc+14)] = rC_14_6
        vC_15_6 = C[e][(6*ldc+15)] if beta != 0.0 else 0.0
        rC_15_6 = vC_15_6 * beta + rC_15_6
        C[e][(6*ldc+15)] = rC_15_6
        vC_16_6 = C[e][(6*ldc+16)] if beta != 0.0 else 0.0
        rC_16_6 = vC_16_6 * beta + rC_16_6
        C[e][(6*ldc+16)] = rC_16_6
        vC_17_6 = C[e][(6*ldc+17)] if beta != 0.0 else 0.0
        rC_17_6 = vC_17_6 * beta + rC_17_6
        C[e][(6*ldc+17)] = rC_17_6
        vC_18_6 = C[e][(6*ldc+18)] if beta != 0.0 else 0.0
        rC_18_6 = vC_18_6 * beta + rC_18_6
        C[e][(6*ldc+18)] = rC_18_6
        vC_19_6 = C[e][(6*ldc+19)] if beta != 0.0 else 0.0
        rC_19_6 = vC_19_6 * beta + rC_19_6
        C[e][(6*ldc+19)] = rC_19_6
        vC_0_7 = C[e][(7*ldc+0)] if beta != 0.0 else 0.0
        rC_0_7 = vC_0_7 * beta + rC_0_7
        C[e][(7*ldc+0)] = rC_0_7
        vC_1_7 = C[e][(7*ldc+1)] if beta != 0.0 else 0.0
        rC_1_7 = vC_1_7 * beta + rC_1_7
        C[e][(7*ldc+1)] = rC_1_7
        vC_2_7 = C[e][(7*ldc+2)] if beta != 0.0 else 0.0
        rC_2_7 = vC_2_7 * beta + rC_2_7
        C[e][(7*ldc+2)] = rC_2_7
        vC_3_7 = C[e][(7*ldc+3)] if beta != 0.0 else 0.0
        rC_3_7 = vC_3_7 * beta + rC_3_7
        C[e][(7*ldc+3)] = rC_3_7
        vC_4_7 = C[e][(7*ldc+4)] if beta != 0.0 else 0.0
        rC_4_7 = vC_4_7 * beta + rC_4_7
        C[e][(7*ldc+4)] = rC_4_7
        vC_5_7 = C[e][(7*ldc+5)] if beta != 0.0 else 0.0
        rC_5_7 = vC_5_7 * beta + rC_5_7
        C[e][(7*ldc+5)] = rC_5_7
        vC_6_7 = C[e][(7*ldc+6)] if beta != 0.0 else 0.0
        rC_6_7 = vC_6_7 * beta + rC_6_7
        C[e][(7*ldc+6)] = rC_6_7
        vC_7_7 = C[e][(7*ldc+7)] if beta != 0.0 else 0.0
        rC_7_7 = vC_7_7 * beta + rC_7_7
        C[e][(7*ldc+7)] = rC_7_7
        vC_8_7 = C[e][(7*ldc+8)] if beta != 0.0 else 0.0
        rC_8_7 = vC_8_7 * beta + rC_8_7
        C[e][(7*ldc+8)] = rC_8_7
        vC_9_7 = C[e][(7*ldc+9)] if beta != 0.0 else 0.0
        rC_9_7 = vC_9_7 * beta + rC_9_7
        C[e][(7*ldc+9)] = rC_9_7
        vC_10_7 = C[e][(7*ldc+10)] if beta != 0.0 else 0.0
        rC_10_7 = vC_10_7 * beta + rC_10_7
        C[e][(7*ldc+10)] = rC_10_7
        vC_11_7 = C[e][(7*ldc+11)] if beta != 0.0 else 0.0
        rC_11_7 = vC_11_7 * beta + rC_11_7
        C[e][(7*ldc+11)] = rC_11_7
        vC_12_7 = C[e][(7*ldc+12)] if beta != 0.0 else 0.0
        rC_12_7 = vC_12_7 * beta + rC_12_7
        C[e][(7*ldc+12)] = rC_12_7
        vC_13_7 = C[e][(7*ldc+13)] if beta != 0.0 else 0.0
        rC_13_7 = vC_13_7 * beta + rC_13_7
        C[e][(7*ldc+13)] = rC_13_7
        vC_14_7 = C[e][(7*ldc+14)] if beta != 0.0 else 0.0
        rC_14_7 = vC_14_7 * beta + rC_14_7
        C[e][(7*ldc+14)] = rC_14_7
        vC_15_7 = C[e][(7*ldc+15)] if beta != 0.0 else 0.0
        rC_15_7 = vC_15_7 * beta + rC_15_7
        C[e][(7*ldc+15)] = rC_15_7
        vC_16_7 = C[e][(7*ldc+16)] if beta != 0.0 else 0.0
        rC_16_7 = vC_16_7 * beta + rC_16_7
        C[e][(7*ldc+16)] = rC_16_7
        vC_17_7 = C[e][(7*ldc+17)] if beta != 0.0 else 0.0
        rC_17_7 = vC_17_7 * beta + rC_17_7
        C[e][(7*ldc+17)] = rC_17_7
        vC_18_7 = C[e][(7*ldc+18)] if beta != 0.0 else 0.0
        rC_18_7 = vC_18_7 * beta + rC_18_7
        C[e][(7*ldc+18)] = rC_18_7
        vC_19_7 = C[e][(7*ldc+19)] if beta != 0.0 else 0.0
        rC_19_7 = vC_19_7 * beta + rC_19_7
        C[e][(7*ldc+19)] = rC_19_7
        vC_0_8 = C[e][(8*ldc+0)] if beta != 0.0 else 0.0
        rC_0_8 = vC_0_8 * beta + rC_0_8
        C[e][(8*ldc+0)] = rC_0_8
        vC_1_8 = C[e][(8*ldc+1)] if beta != 0.0 else 0.0
        rC_1_8 = vC_1_8 * beta + rC_1_8
        C[e][(8*ldc+1)] = rC_1_8
        vC_2_8 = C[e][(8*ldc+2)] if beta != 0.0 else 0.0
        rC_2_8 = vC_2_8 * beta + rC_2_8
        C[e][(8*ldc+2)] = rC_2_8
        vC_3_8 = C[e][(8*ldc+3)] if beta != 0.0 else 0.0
        rC_3_8 = vC_3_8 * beta + rC_3_8
        C[e][(8*ldc+3)] = rC_3_8
        vC_4_8 = C[e][(8*ldc+4)] if beta != 0.0 else 0.0
        rC_4_8 = vC_4_8 * beta + rC_4_8
        C[e][(8*ldc+4)] = rC_4_8
        vC_5_8 = C[e][(8*ldc+5)] if beta != 0.0 else 0.0
        rC_5_8 = vC_5_8 * beta + rC_5_8
        C[e][(8*ldc+5)] = rC_5_8
        vC_6_8 = C[e][(8*ldc+6)] if beta != 0.0 else 0.0
        rC_6_8 = vC_6_8 * beta + rC_6_8
        C[e][(8*ldc+6)] = rC_6_8
        vC_7_8 = C[e][(8*ldc+7)] if beta != 0.0 else 0.0
        rC_7_8 = vC_7_8 * beta + rC_7_8
        C[e][(8*ldc+7)] = rC_7_8
        vC_8_8 = C[e][(8*ldc+8)] if beta != 0.0 else 0.0
        rC_8_8 = vC_8_8 * beta + rC_8_8
        C[e][(8*ldc+8)] = rC_8_8
        vC_9_8 = C[e][(8*ldc+9)] if beta != 0.0 else 0.0
        rC_9_8 = vC_9_8 * beta + rC_9_8
        C[e][(8*ldc+9)] = rC_9_8
        vC_10_8 = C[e][(8*ldc+10)] if beta != 0.0 else 0.0
        rC_10_8 = vC_10_8 * beta + rC_10_8
        C[e][(8*ldc+10)] = rC_10_8
        vC_11_8 = C[e][(8*ldc+11)] if beta != 0.0 else 0.0
        rC_11_8 = vC_11_8 * beta + rC_11_8
        C[e][(8*ldc+11)] = rC_11_8
        vC_12_8 = C[e][(8*ldc+12)] if beta != 0.0 else 0.0
        rC_12_8 = vC_12_8 * beta + rC_12_8
        C[e][(8*ldc+12)] = rC_12_8
        vC_13_8 = C[e][(8*ldc+13)] if beta != 0.0 else 0.0
        rC_13_8 = vC_13_8 * beta + rC_13_8
        C[e][(8*ldc+13)] = rC_13_8
        vC_14_8 = C[e][(8*ldc+14)] if beta != 0.0 else 0.0
        rC_14_8 = vC_14_8 * beta + rC_14_8
        C[e][(8*ldc+14)] = rC_14_8
        vC_15_8 = C[e][(8*ldc+15)] if beta != 0.0 else 0.0
        rC_15_8 = vC_15_8 * beta + rC_15_8
        C[e][(8*ldc+15)] = rC_15_8
        vC_16_8 = C[e][(8*ldc+16)] if beta != 0.0 else 0.0
        rC_16_8 = vC_16_8 * beta + rC_16_8
        C[e][(8*ldc+16)] = rC_16_8
        vC_17_8 = C[e][(8*ldc+17)] if beta != 0.0 else 0.0
        rC_17_8 = vC_17_8 * beta + rC_17_8
        C[e][(8*ldc+17)] = rC_17_8
        vC_18_8 = C[e][(8*ldc+18)] if beta != 0.0 else 0.0
        rC_18_8 = vC_18_8 * beta + rC_18_8
        C[e][(8*ldc+18)] = rC_18_8
        vC_19_8 = C[e][(8*ldc+19)] if beta != 0.0 else 0.0
        rC_19_8 = vC_19_8 * beta + rC_19_8
        C[e][(8*ldc+19)] = rC_19_8
