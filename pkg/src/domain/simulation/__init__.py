"""
시뮬레이션 Domain

모의실험의 참 모형 (위치, 척도, 치유 곡선, 오차 분포, 중도절단 분포).
"""
