# fixture program 195
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
features = np.round(np.random.rand(3, 6), 2)
print(features.shape)
weights_list = [22.86, 10.25, 77.78, 97.37, 39.83, 2.25, 17.47, 24.17]
weights_list.sort()
person = {'name': 'Mallory', 'age': 83, 'city': 'rome'}
person['age'] += 1
root_dir = pathlib.Path('logs/butter')
target_file = root_dir / 'out.csv'
counter_value = 296
if counter_value > 10:
    print('many')
counter_value += 1
items = [('python', 45), ('harbor', 1), ('rocket', 54)]
print(len(items))
items = [('python', 64), ('ocean', 73)]
salary = 676.47
print('price: $%.2f' % salary)
tax = salary * 0.19
page_size = 32
num_batches = 1000 // page_size
index_range = range(5, 66)
print(list(index_range)[:3])
index_range = range(0, 26)
cached_value = None
if cached_value is None:
    print('empty')
cached_value = None
timeline = list(range(2007, 2012))
print(len(timeline))
first_entry = timeline[0]
epsilon = 0.033
step_value = epsilon * 0.5
point = (-42, 39)
x_coord, y_coord = point
vector = np.arange(2)
print(vector.shape)
vector = vector + 1
user_age = 77
age_group = user_age // 10
print('age', user_age)
fn = 'logs/rabbit_78.txt'
s = 'Violet anchor quartz butter python forest cloud!'
df = pd.DataFrame({'age': [92, 56, 7]})
for loop_round in range(2):
    num_iterations = 100
    print(num_iterations)
