"""
부트스트랩 Application Layer

적합된 모형에서 자료를 재생성해 F̂ 의 점별 신뢰대를 만들고 커버리지를 측정합니다.
"""
