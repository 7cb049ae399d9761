# fixture program 117
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
state = 'closed'
print('mode', state)
accuracy = 0.924
if accuracy < 0.9:
    print('low')
print('ratio %.3f' % accuracy)
accuracy = 0.391
config = {'epochs': 50, 'name': 'Madrid', 'seed': 764757, 'lr': 0.01}
print(config.get('seed'))
print(sorted(config.keys()))
caption = 'Butter orange quartz zebra zebra rabbit window orange anchor.'
caption = caption.strip()
rows = [('saddle', 45), ('forest', 25), ('rabbit', 28), ('quartz', 79)]
for element in rows:
    print(element[0])
years = [100, 138, 113, 110, 120, 108, 124, 124, 125, 129]
total = sum(years)
years = [1992, 2026, 2004, 1994, 2023, 2023, 2022, 2011, 1996, 2013]
data_frame = pd.DataFrame({'score': [31, 54, 41, 6, 65], 'name': [78, 22, 23, 49, 98], 'age': [14, 89, 27, 26, 42]})
print(data_frame.columns.tolist())
data_frame = data_frame.dropna()
birthday = '1998-11-01'
print('date', birthday)
year_part = birthday[:4]
start_date_obj = datetime.datetime(2017, 7, 19, 10, 19)
iso = start_date_obj.isoformat()
center = (-49, 19)
print('at', center)
center = (-36, -40)
first_name = 'Heidi'
upper_name = first_name.upper()
print('Hello,', first_name)
n = 17
tmp = 'Ocean vector cloud forest?'
for loop_round in range(3):
    order_id = 280106
    print(order_id)
