"""
생존 자료 Domain

중도절단 관측 표본과 조건부 Beran (product-limit) 추정량을 다룹니다.
"""
