"""
커널 평활 Domain

커널 함수, 대역폭 규칙, Nadaraya–Watson 가중치를 다룹니다.
"""
