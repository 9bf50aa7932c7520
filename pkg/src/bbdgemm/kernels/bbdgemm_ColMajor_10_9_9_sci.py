# Generated by genkernels. Do not edit by hand.

from bbdgemm.vectorize import vectorize_batch_loop


@vectorize_batch_loop("bbdgemm_ColMajor_10_9_9_sci")
def bbdgemm_ColMajor_10_9_9_sci(E, alpha, A, lda, B, ldb, beta, C, ldc):
    sizeA = 9 * lda
    for e in range(E):
        vA_0_0 = A[e*sizeA+(0*lda+0)]
        vA_0_1 = A[e*sizeA+(1*lda+0)]
        vA_0_2 = A[e*sizeA+(2*lda+0)]
        vA_0_3 = A[e*sizeA+(3*lda+0)]
        vA_0_4 = A[e*sizeA+(4*lda+0)]
        vA_0_5 = A[e*sizeA+(5*lda+0)]
        vA_0_6 = A[e*sizeA+(6*lda+0)]
        vA_0_7 = A[e*sizeA+(7*lda+0)]
        vA_0_8 = A[e*sizeA+(8*lda+0)]
        vA_1_0 = A[e*sizeA+(0*lda+1)]
        vA_1_1 = A[e*sizeA+(1*lda+1)]
        vA_1_2 = A[e*sizeA+(2*lda+1)]
        vA_1_3 = A[e*sizeA+(3*lda+1)]
        vA_1_4 = A[e*sizeA+(4*lda+1)]
        vA_1_5 = A[e*sizeA+(5*lda+1)]
        vA_1_6 = A[e*sizeA+(6*lda+1)]
        vA_1_7 = A[e*sizeA+(7*lda+1)]
        vA_1_8 = A[e*sizeA+(8*lda+1)]
        vA_2_0 = A[e*sizeA+(0*lda+2)]
        vA_2_1 = A[e*sizeA+(1*lda+2)]
        vA_2_2 = A[e*sizeA+(2*lda+2)]
        vA_2_3 = A[e*sizeA+(3*lda+2)]
        vA_2_4 = A[e*sizeA+(4*lda+2)]
        vA_2_5 = A[e*sizeA+(5*lda+2)]
        vA_2_6 = A[e*sizeA+(6*lda+2)]
        vA_2_7 = A[e*sizeA+(7*lda+2)]
        vA_2_8 = A[e*sizeA+(8*lda+2)]
        vA_3_0 = A[e*sizeA+(0*lda+3)]
        vA_3_1 = A[e*sizeA+(1*lda+3)]
        vA_3_2 = A[e*sizeA+(2*lda+3)]
        vA_3_3 = A[e*sizeA+(3*lda+3)]
        vA_3_4 = A[e*sizeA+(4*lda+3)]
        vA_3_5 = A[e*sizeA+(5*lda+3)]
        vA_3_6 = A[e*sizeA+(6*lda+3)]
        vA_3_7 = A[e*sizeA+(7*lda+3)]
        vA_3_8 = A[e*sizeA+(8*lda+3)]
        vA_4_0 = A[e*sizeA+(0*lda+4)]
        vA_4_1 = A[e*sizeA+(1*lda+4)]
        vA_4_2 = A[e*sizeA+(2*lda+4)]
        vA_4_3 = A[e*sizeA+(3*lda+4)]
        vA_4_4 = A[e*sizeA+(4*lda+4)]
        vA_4_5 = A[e*sizeA+(5*lda+4)]
        vA_4_6 = A[e*sizeA+(6*lda+4)]
        vA_4_7 = A[e*sizeA+(7*lda+4)]
        vA_4_8 = A[e*sizeA+(8*lda+4)]
        vA_5_0 = A[e*sizeA+(0*lda+5)]
        vA_5_1 = A[e*sizeA+(1*lda+5)]
        vA_5_2 = A[e*sizeA+(2*lda+5)]
        vA_5_3 = A[e*sizeA+(3*lda+5)]
        vA_5_4 = A[e*sizeA+(4*lda+5)]
        vA_5_5 = A[e*sizeA+(5*lda+5)]
        vA_5_6 = A[e*sizeA+(6*lda+5)]
        vA_5_7 = A[e*sizeA+(7*lda+5)]
        vA_5_8 = A[e*sizeA+(8*lda+5)]
        vA_6_0 = A[e*sizeA+(0*lda+6)]
        vA_6_1 = A[e*sizeA+(1*lda+6)]
        vA_6_2 = A[e*sizeA+(2*lda+6)]
        vA_6_3 = A[e*sizeA+(3*lda+6)]
        vA_6_4 = A[e*sizeA+(4*lda+6)]
        vA_6_5 = A[e*sizeA+(5*lda+6)]
        vA_6_6 = A[e*sizeA+(6*lda+6)]
        vA_6_7 = A[e*sizeA+(7*lda+6)]
        vA_6_8 = A[e*sizeA+(8*lda+6)]
        vA_7_0 = A[e*sizeA+(0*lda+7)]
        vA_7_1 = A[e*sizeA+(1*lda+7)]
        vA_7_2 = A[e*sizeA+(2*lda+7)]
        vA_7_3 = A[e*sizeA+(3*lda+7)]
        vA_7_4 = A[e*sizeA+(4*lda+7)]
        vA_7_5 = A[e*sizeA+(5*lda+7)]
        vA_7_6 = A[e*sizeA+(6*lda+7)]
        vA_7_7 = A[e*sizeA+(7*lda+7)]
        vA_7_8 = A[e*sizeA+(8*lda+7)]
        vA_8_0 = A[e*sizeA+(0*lda+8)]
        vA_8_1 = A[e*sizeA+(1*lda+8)]
        vA_8_2 = A[e*sizeA+(2*lda+8)]
        vA_8_3 = A[e*sizeA+(3*lda+8)]
        vA_8_4 = A[e*sizeA+(4*lda+8)]
        vA_8_5 = A[e*sizeA+(5*lda+8)]
        vA_8_6 = A[e*sizeA+(6*lda+8)]
        vA_8_7 = A[e*sizeA+(7*lda+8)]
        vA_8_8 = A[e*sizeA+(8*lda+8)]
        vA_9_0 = A[e*sizeA+(0*lda+9)]
        vA_9_1 = A[e*sizeA+(1*lda+9)]
        vA_9_2 = A[e*sizeA+(2*lda+9)]
        vA_9_3 = A[e*sizeA+(3*lda+9)]
        vA_9_4 = A[e*sizeA+(4*lda+9)]
        vA_9_5 = A[e*sizeA+(5*lda+9)]
        vA_9_6 = A[e*sizeA+(6*lda+9)]
        vA_9_7 = A[e*sizeA+(7*lda+9)]
        vA_9_8 = A[e*sizeA+(8*lda+9)]
        vB_0_0 = B[(0*ldb+0)]
        vB_0_1 = B[(1*ldb+0)]
        vB_0_2 = B[(2*ldb+0)]
        vB_0_3 = B[(3*ldb+0)]
        vB_0_4 = B[(4*ldb+0)]
        vB_0_5 = B[(5*ldb+0)]
        vB_0_6 = B[(6*ldb+0)]
        vB_0_7 = B[(7*ldb+0)]
        vB_0_8 = B[(8*ldb+0)]
        vB_1_0 = B[(0*ldb+1)]
        vB_1_1 = B[(1*ldb+1)]
        vB_1_2 = B[(2*ldb+1)]
        vB_1_3 = B[(3*ldb+1)]
        vB_1_4 = B[(4*ldb+1)]
        vB_1_5 = B[(5*ldb+1)]
        vB_1_6 = B[(6*ldb+1)]
        vB_1_7 = B[(7*ldb+1)]
        vB_1_8 = B[(8*ldb+1)]
        vB_2_0 = B[(0*ldb+2)]
        vB_2_1 = B[(1*ldb+2)]
        vB_2_2 = B[(2*ldb+2)]
        vB_2_3 = B[(3*ldb+2)]
        vB_2_4 = B[(4*ldb+2)]
        vB_2_5 = B[(5*ldb+2)]
        vB_2_6 = B[(6*ldb+2)]
        vB_2_7 = B[(7*ldb+2)]
        vB_2_8 = B[(8*ldb+2)]
        vB_3_0 = B[(0*ldb+3)]
        vB_3_1 = B[(1*ldb+3)]
        vB_3_2 = B[(2*ldb+3)]
        vB_3_3 = B[(3*ldb+3)]
        vB_3_4 = B[(4*ldb+3)]
        vB_3_5 = B[(5*ldb+3)]
        vB_3_6 = B[(6*ldb+3)]
        vB_3_7 = B[(7*ldb+3)]
        vB_3_8 = B[(8*ldb+3)]
        vB_4_0 = B[(0*ldb+4)]
        vB_4_1 = B[(1*ldb+4)]
        vB_4_2 = B[(2*ldb+4)]
        vB_4_3 = B[(3*ldb+4)]
        vB_4_4 = B[(4*ldb+4)]
        vB_4_5 = B[(5*ldb+4)]
        vB_4_6 = B[(6*ldb+4)]
        vB_4_7 = B[(7*ldb+4)]
        vB_4_8 = B[(8*ldb+4)]
        vB_5_0 = B[(0*ldb+5)]
        vB_5_1 = B[(1*ldb+5)]
        vB_5_2 = B[(2*ldb+5)]
        vB_5_3 = B[(3*ldb+5)]
        vB_5_4 = B[(4*ldb+5)]
        vB_5_5 = B[(5*ldb+5)]
        vB_5_6 = B[(6*ldb+5)]
        vB_5_7 = B[(7*ldb+5)]
        vB_5_8 = B[(8*ldb+5)]
        vB_6_0 = B[(0*ldb+6)]
        vB_6_1 = B[(1*ldb+6)]
        vB_6_2 = B[(2*ldb+6)]
        vB_6_3 = B[(3*ldb+6)]
        vB_6_4 = B[(4*ldb+6)]
        vB_6_5 = B[(5*ldb+6)]
        vB_6_6 = B[(6*ldb+6)]
        vB_6_7 = B[(7*ldb+6)]
        vB_6_8 = B[(8*ldb+6)]
        vB_7_0 = B[(0*ldb+7)]
        vB_7_1 = B[(1*ldb+7)]
        vB_7_2 = B[(2*ldb+7)]
        vB_7_3 = B[(3*ldb+7)]
        vB_7_4 = B[(4*ldb+7)]
        vB_7_5 = B[(5*ldb+7)]
        vB_7_6 = B[(6*ldb+7)]
        vB_7_7 = B[(7*ldb+7)]
        vB_7_8 = B[(8*ldb+7)]
        vB_8_0 = B[(0*ldb+8)]
        vB_8_1 = B[(1*ldb+8)]
        vB_8_2 = B[(2*ldb+8)]
        vB_8_3 = B[(3*ldb+8)]
        vB_8_4 = B[(4*ldb+8)]
        vB_8_5 = B[(5*ldb+8)]
        vB_8_6 = B[(6*ldb+8)]
        vB_8_7 = B[(7*ldb+8)]
        vB_8_8 = B[(8*ldb+8)]
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
        rC_9_0 = rC_9_0 * alpha
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
        rC_9_1 = rC_9_1 * alpha
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
        rC_9_2 = rC_9_2 * alpha
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
        rC_9_3 = rC_9_3 * alpha
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
        rC_9_4 = rC_9_4 * alpha
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
        rC_9_5 = rC_9_5 * alpha
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
        rC_9_6 = rC_9_6 * alpha
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
        rC_9_7 = rC_9_7 * alpha
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
        rC_9_8 = rC_9_8 * alpha
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
