"""
모형 적합 Application Layer

표본과 요청 DTO 로 모형을 적합하고, 곡선/F̂/대역폭 비교 결과를 만듭니다.
"""
