"""
Application Layer

유즈케이스와 DTO를 정의합니다.
도메인 추정량을 조율하여 적합, 부트스트랩, 시뮬레이션 흐름을 구현합니다.
"""
