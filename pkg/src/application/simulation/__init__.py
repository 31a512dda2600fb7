"""
시뮬레이션 Application Layer

참 모형 자료 생성과 AMSE / AMISE Monte Carlo 실험을 담당합니다.
"""
