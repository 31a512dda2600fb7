"""
혼합 치유 모형 Domain

치유 비율 π̂, 국소 위치/척도 m̂, ŝ, 표준화 오차 분포 F̂ 추정량을 다룹니다.
"""
